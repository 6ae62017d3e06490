#pragma once

#include <falg/poly.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace falg {

/// Sparse matrix row: (column id, value) sorted by column id.
using SparseRow = std::vector<std::pair<std::int64_t, Rat>>;

struct RankOptions {
  /// Run a word-size prime elimination first.  Its result is accepted as
  /// final only in the two one-sided cases where it is a proof over Q (full
  /// column rank or full row rank); otherwise exact elimination decides.
  bool modular_prescreen = true;
};

struct RankStats {
  std::size_t rows = 0;
  std::int64_t cols = 0;
  std::size_t rank = 0;
  bool certified_by_modular = false;
};

/// Incremental staircase form over Q, pivot rows keyed by leading column.
class RationalEchelon {
 public:
  /// Returns true iff the row was independent of the current pivots.
  bool insert(SparseRow row);
  std::size_t rank() const { return pivots_.size(); }
  /// Pivot rows in ascending pivot-column order; they span the row space.
  std::vector<SparseRow> pivot_rows() const;

 private:
  std::map<std::int64_t, SparseRow> pivots_;
};

inline constexpr std::uint64_t kRankPrime = 2305843009213693951ull;  // 2^61 - 1

/// Rank over GF(prime); nullopt when an entry's denominator vanishes mod p.
std::optional<std::size_t> modular_rank(const std::vector<SparseRow>& rows,
                                        std::uint64_t prime = kRankPrime);

/// Exact rank over Q of rows living in columns 0..ncols-1.
std::size_t matrix_rank(std::vector<SparseRow> rows, std::int64_t ncols,
                        const RankOptions& opts = {},
                        RankStats* stats = nullptr);

}  // namespace falg
