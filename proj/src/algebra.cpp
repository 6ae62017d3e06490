#include <falg/algebra.hpp>

#include <falg/errors.hpp>

#include <algorithm>
#include <functional>
#include <iostream>
#include <map>
#include <stdexcept>
#include <string>

namespace falg {

std::size_t CutDegrees::at(std::uint32_t mask) const {
  if (mask == 0 || mask >= by_mask.size())
    throw std::invalid_argument("vertex subset out of range");
  return by_mask[mask];
}

CutDegrees cut_degrees(const Multigraph& g, const AlgebraOptions& opts) {
  const int n = g.vertex_count();
  if (n > opts.max_subset_vertices)
    throw budget_error("cut-degree enumeration exceeds max-subset-vertices cap (" +
                       std::to_string(opts.max_subset_vertices) + ")");
  CutDegrees out;
  out.n = n;
  out.by_mask.assign(std::size_t(1) << n, 0);
  for (std::uint32_t mask = 1; mask < out.by_mask.size(); ++mask) {
    std::size_t d = 0;
    for (const auto& [a, b] : g.edges()) {
      if (a == b) continue;  // loops never cross a cut
      const bool ina = mask & (1u << a);
      const bool inb = mask & (1u << b);
      if (ina != inb) ++d;
    }
    out.by_mask[mask] = d;
  }
  return out;
}

GeneratorMatrix generator_matrix(const Multigraph& g) {
  GeneratorMatrix m;
  m.n = g.vertex_count();
  m.e = g.edge_count();
  m.sign.assign(m.n, std::vector<int>(m.e, 0));
  for (std::size_t j = 0; j < m.e; ++j) {
    const auto [a, b] = g.edges()[j];
    if (a == b) continue;
    m.sign[std::min(a, b)][j] = 1;
    m.sign[std::max(a, b)][j] = -1;
  }
  return m;
}

namespace {

// Edge-variable monomials are encoded in mixed radix t+1: digit f of the
// code is the exponent of phi_{e_f}.  The basis cap keeps codes in int64.
struct PhiEncoding {
  long t;
  std::vector<std::int64_t> step;  // step[f] = (t+1)^f

  explicit PhiEncoding(long t_, std::size_t e) : t(t_), step(e) {
    std::int64_t s = 1;
    for (std::size_t f = 0; f < e; ++f) {
      step[f] = s;
      s *= (t + 1);
    }
  }

  long digit(std::int64_t code, std::size_t f) const {
    return static_cast<long>((code / step[f]) % (t + 1));
  }
};

}  // namespace

HilbertFunction subalgebra_hilbert(const Multigraph& g, long t,
                                   const AlgebraOptions& opts) {
  if (t < 1) throw std::invalid_argument("t must be >= 1");
  const std::size_t e = g.edge_count();
  const int n = g.vertex_count();

  Int basis_size(1);
  for (std::size_t f = 0; f < e; ++f) basis_size *= (t + 1);
  if (basis_size > Int(static_cast<unsigned long>(opts.max_basis)))
    throw budget_error("edge-variable basis (t+1)^e exceeds max-basis cap (" +
                       std::to_string(opts.max_basis) + ")");

  const long top = t * static_cast<long>(e);
  HilbertFunction h;
  h.t = t;
  h.dims.assign(top + 1, Int(0));
  h.dims[0] = 1;

  const GeneratorMatrix gens = generator_matrix(g);
  const PhiEncoding enc(t, e);

  // span of degree-k monomials in the X_i = X_i * span of degree k-1, so a
  // staircase basis of each graded piece feeds the next one.
  std::vector<SparseRow> basis{SparseRow{{0, Rat(1)}}};
  for (long k = 1; k <= top && !basis.empty(); ++k) {
    RationalEchelon echelon;
    for (const SparseRow& row : basis) {
      for (int i = 0; i < n; ++i) {
        std::map<std::int64_t, Rat> acc;
        for (const auto& [code, v] : row) {
          for (std::size_t f = 0; f < e; ++f) {
            const int s = gens.sign[i][f];
            if (s == 0) continue;
            if (enc.digit(code, f) >= t) continue;  // phi^{t+1} = 0 truncation
            acc[code + enc.step[f]] += s > 0 ? v : -v;
          }
        }
        SparseRow product;
        product.reserve(acc.size());
        for (auto& [code, v] : acc)
          if (v != 0) product.emplace_back(code, std::move(v));
        if (!product.empty()) echelon.insert(std::move(product));
      }
    }
    h.dims[k] = Int(static_cast<unsigned long>(echelon.rank()));
    basis = echelon.pivot_rows();
  }
  return h;
}

namespace {

Int binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return Int(0);
  Int out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return out;
}

using Exponents = std::vector<int>;

// Monomials of total degree `deg` in n variables, descending lexicographic
// order, with positions as column ids.
struct MonomialTable {
  std::vector<Exponents> list;
  std::map<Exponents, std::int64_t> index;
};

void enumerate_monomials(int n, int deg, Exponents& prefix,
                         std::vector<Exponents>& out) {
  const int pos = static_cast<int>(prefix.size());
  if (pos == n - 1) {
    prefix.push_back(deg);
    out.push_back(prefix);
    prefix.pop_back();
    return;
  }
  for (int a = deg; a >= 0; --a) {
    prefix.push_back(a);
    enumerate_monomials(n, deg - a, prefix, out);
    prefix.pop_back();
  }
}

MonomialTable build_monomial_table(int n, int deg) {
  MonomialTable table;
  Exponents prefix;
  enumerate_monomials(n, deg, prefix, table.list);
  for (std::size_t i = 0; i < table.list.size(); ++i)
    table.index.emplace(table.list[i], static_cast<std::int64_t>(i));
  return table;
}

struct IdealGenerator {
  std::uint32_t mask;
  long degree;                                  // t * D_I + 1
  std::vector<std::pair<Exponents, Int>> terms; // expansion of (sum x_i)^d
};

// Multinomial expansion of (sum_{i in I} x_i)^d.
std::vector<std::pair<Exponents, Int>> expand_power_sum(
    const std::vector<int>& support, int n, long d) {
  std::vector<std::pair<Exponents, Int>> out;
  Exponents exps(n, 0);
  const std::function<void(std::size_t, long, Int)> rec =
      [&](std::size_t pos, long remaining, Int coeff) {
        if (pos + 1 == support.size()) {
          exps[support[pos]] = static_cast<int>(remaining);
          out.emplace_back(exps, coeff);
          exps[support[pos]] = 0;
          return;
        }
        for (long a = 0; a <= remaining; ++a) {
          exps[support[pos]] = static_cast<int>(a);
          rec(pos + 1, remaining - a, coeff * binomial(remaining, a));
        }
        exps[support[pos]] = 0;
      };
  rec(0, d, Int(1));
  return out;
}

}  // namespace

HilbertFunction quotient_hilbert(const Multigraph& g, long t,
                                 const AlgebraOptions& opts) {
  if (t < 1) throw std::invalid_argument("t must be >= 1");
  const int n = g.vertex_count();
  const long top = t * static_cast<long>(g.edge_count());

  HilbertFunction h;
  h.t = t;
  h.dims.assign(top + 1, Int(0));
  h.dims[0] = 1;
  if (n == 0) return h;  // K[] = K

  const CutDegrees cuts = cut_degrees(g, opts);

  std::vector<IdealGenerator> gens;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    const long d = t * static_cast<long>(cuts.by_mask[mask]) + 1;
    std::vector<int> support;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) support.push_back(i);
    gens.push_back({mask, d, expand_power_sum(support, n, d)});
  }

  std::map<int, MonomialTable> tables;
  const auto table_for = [&](int deg) -> const MonomialTable& {
    auto it = tables.find(deg);
    if (it == tables.end())
      it = tables.emplace(deg, build_monomial_table(n, deg)).first;
    return it->second;
  };

  long last_nonzero = 0;
  long k = 1;
  while (k <= std::max(top, last_nonzero + n)) {
    const Int monomials = binomial(n + k - 1, k);
    if (monomials > Int(static_cast<unsigned long>(opts.max_basis)))
      throw budget_error("Macaulay column count exceeds max-basis cap (" +
                         std::to_string(opts.max_basis) + ")");
    const MonomialTable& cols = table_for(static_cast<int>(k));

    std::vector<SparseRow> rows;
    for (const IdealGenerator& gen : gens) {
      if (gen.degree > k) continue;
      const MonomialTable& shifts = table_for(static_cast<int>(k - gen.degree));
      for (const Exponents& beta : shifts.list) {
        SparseRow row;
        row.reserve(gen.terms.size());
        for (const auto& [alpha, c] : gen.terms) {
          Exponents gamma(n);
          for (int i = 0; i < n; ++i) gamma[i] = alpha[i] + beta[i];
          row.emplace_back(cols.index.at(gamma), Rat(c));
        }
        std::sort(row.begin(), row.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        rows.push_back(std::move(row));
      }
    }

    RankStats stats;
    const std::size_t rank =
        matrix_rank(std::move(rows), static_cast<std::int64_t>(cols.list.size()),
                    RankOptions{opts.modular_prescreen}, &stats);
    const Int dim = monomials - Int(static_cast<unsigned long>(rank));
    if (opts.debug_dump)
      std::cerr << "macaulay degree " << k << ": " << stats.rows << "x"
                << stats.cols << " rank " << stats.rank
                << (stats.certified_by_modular ? " (modular certificate)" : "")
                << " dim " << dim.get_str() << '\n';

    if (k <= top) {
      h.dims[k] = dim;
      if (dim != 0) last_nonzero = k;
    } else if (dim != 0) {
      throw std::runtime_error(
          "quotient has nonzero dimension beyond the expected top degree at k=" +
          std::to_string(k));
    }
    ++k;
  }
  return h;
}

bool isomorphism_check(const Multigraph& g, long t, const AlgebraOptions& opts) {
  return subalgebra_hilbert(g, t, opts) == quotient_hilbert(g, t, opts);
}

}  // namespace falg
