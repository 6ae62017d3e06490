#include <falg/linalg.hpp>

#include <algorithm>
#include <stdexcept>

namespace falg {

namespace {

// target += factor * pivot, sparse merge; both sorted by column.
SparseRow axpy(const SparseRow& target, const Rat& factor,
               const SparseRow& pivot) {
  SparseRow out;
  out.reserve(target.size() + pivot.size());
  std::size_t i = 0, j = 0;
  while (i < target.size() || j < pivot.size()) {
    if (j == pivot.size() ||
        (i < target.size() && target[i].first < pivot[j].first)) {
      out.push_back(target[i++]);
    } else if (i == target.size() || pivot[j].first < target[i].first) {
      Rat v = factor * pivot[j].second;
      if (v != 0) out.emplace_back(pivot[j].first, std::move(v));
      ++j;
    } else {
      Rat v = target[i].second + factor * pivot[j].second;
      if (v != 0) out.emplace_back(target[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

bool RationalEchelon::insert(SparseRow row) {
  while (!row.empty()) {
    const std::int64_t lead = row.front().first;
    const auto it = pivots_.find(lead);
    if (it == pivots_.end()) {
      // Normalize the leading coefficient to 1 so reductions need no ratio.
      const Rat inv = Rat(1) / row.front().second;
      for (auto& [col, v] : row) v *= inv;
      pivots_.emplace(lead, std::move(row));
      return true;
    }
    row = axpy(row, Rat(-row.front().second), it->second);
  }
  return false;
}

std::vector<SparseRow> RationalEchelon::pivot_rows() const {
  std::vector<SparseRow> out;
  out.reserve(pivots_.size());
  for (const auto& [col, row] : pivots_) out.push_back(row);
  return out;
}

namespace {

// Arithmetic mod the Mersenne prime 2^61 - 1.
std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  while (e > 0) {
    if (e & 1ull) r = mul_mod(r, a, p);
    a = mul_mod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t rat_mod(const Rat& q, std::uint64_t p, bool& ok) {
  const std::uint64_t num =
      mpz_fdiv_ui(q.get_num().get_mpz_t(), static_cast<unsigned long>(p));
  const std::uint64_t den =
      mpz_fdiv_ui(q.get_den().get_mpz_t(), static_cast<unsigned long>(p));
  if (den == 0) {
    ok = false;
    return 0;
  }
  return mul_mod(num, pow_mod(den, p - 2, p), p);
}

using ModRow = std::vector<std::pair<std::int64_t, std::uint64_t>>;

ModRow mod_axpy(const ModRow& target, std::uint64_t factor, const ModRow& pivot,
                std::uint64_t p) {
  ModRow out;
  out.reserve(target.size() + pivot.size());
  std::size_t i = 0, j = 0;
  while (i < target.size() || j < pivot.size()) {
    if (j == pivot.size() ||
        (i < target.size() && target[i].first < pivot[j].first)) {
      out.push_back(target[i++]);
    } else if (i == target.size() || pivot[j].first < target[i].first) {
      const std::uint64_t v = mul_mod(factor, pivot[j].second, p);
      if (v != 0) out.emplace_back(pivot[j].first, v);
      ++j;
    } else {
      const std::uint64_t v =
          (target[i].second + mul_mod(factor, pivot[j].second, p)) % p;
      if (v != 0) out.emplace_back(target[i].first, v);
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

std::optional<std::size_t> modular_rank(const std::vector<SparseRow>& rows,
                                        std::uint64_t prime) {
  std::map<std::int64_t, ModRow> pivots;
  for (const SparseRow& source : rows) {
    ModRow row;
    row.reserve(source.size());
    bool ok = true;
    for (const auto& [col, v] : source) {
      const std::uint64_t m = rat_mod(v, prime, ok);
      if (!ok) return std::nullopt;
      if (m != 0) row.emplace_back(col, m);
    }
    while (!row.empty()) {
      const std::int64_t lead = row.front().first;
      const auto it = pivots.find(lead);
      if (it == pivots.end()) {
        const std::uint64_t inv = pow_mod(row.front().second, prime - 2, prime);
        for (auto& [col, v] : row) v = mul_mod(v, inv, prime);
        pivots.emplace(lead, std::move(row));
        break;
      }
      row = mod_axpy(row, prime - row.front().second, it->second, prime);
    }
  }
  return pivots.size();
}

std::size_t matrix_rank(std::vector<SparseRow> rows, std::int64_t ncols,
                        const RankOptions& opts, RankStats* stats) {
  if (stats) {
    stats->rows = rows.size();
    stats->cols = ncols;
    stats->certified_by_modular = false;
  }

  // Sparsest rows first keeps fill-in down; stable for determinism.
  std::stable_sort(rows.begin(), rows.end(),
                   [](const SparseRow& a, const SparseRow& b) {
                     return a.size() < b.size();
                   });

  if (opts.modular_prescreen) {
    const auto mod = modular_rank(rows);
    // rank_p <= rank_Q <= min(rows, cols): equality at either end is a proof.
    if (mod && (*mod == static_cast<std::size_t>(ncols) || *mod == rows.size())) {
      if (stats) {
        stats->rank = *mod;
        stats->certified_by_modular = true;
      }
      return *mod;
    }
  }

  RationalEchelon echelon;
  for (SparseRow& row : rows) echelon.insert(std::move(row));
  if (stats) stats->rank = echelon.rank();
  return echelon.rank();
}

}  // namespace falg
