#pragma once

#include <falg/hilbert.hpp>
#include <falg/linalg.hpp>
#include <falg/multigraph.hpp>

#include <cstdint>
#include <vector>

namespace falg {

struct AlgebraOptions {
  /// Cap on (t+1)^e (edge-variable monomial basis) and on the number of
  /// degree-k monomial columns of the Macaulay matrices.
  std::uint64_t max_basis = 200'000;
  /// Cut degrees enumerate 2^n - 1 vertex subsets.
  int max_subset_vertices = 16;
  bool modular_prescreen = true;
  /// Dump Macaulay matrix shapes and ranks per degree to stderr.
  bool debug_dump = false;
};

/// D[I] = number of non-loop edges with exactly one endpoint in I, for every
/// nonempty vertex subset I (bitmask index).
struct CutDegrees {
  int n = 0;
  std::vector<std::size_t> by_mask;  // index = subset bitmask; [0] unused

  std::size_t at(std::uint32_t mask) const;
};

CutDegrees cut_degrees(const Multigraph& g, const AlgebraOptions& opts = {});

/// Signs c[i][e]: +1 at the smaller endpoint, -1 at the bigger, 0 elsewhere;
/// loop columns are all zero.
struct GeneratorMatrix {
  int n = 0;
  std::size_t e = 0;
  std::vector<std::vector<int>> sign;  // n rows, e columns
};

GeneratorMatrix generator_matrix(const Multigraph& g);

/// Graded dimensions of the subalgebra generated by the signed vertex sums
/// X_i inside the edge-variable algebra with relations phi_e^{t+1} = 0,
/// by exact rank of the degree-k spans.
HilbertFunction subalgebra_hilbert(const Multigraph& g, long t,
                                   const AlgebraOptions& opts = {});

/// Graded dimensions of K[x_1..x_n] / (ideal of (sum_{i in I} x_i)^{t D_I + 1})
/// by degree-wise Macaulay ranks; also verifies vanishing for n extra degrees
/// past the last nonzero one.
HilbertFunction quotient_hilbert(const Multigraph& g, long t,
                                 const AlgebraOptions& opts = {});

/// Dimension-level check that the quotient and subalgebra presentations
/// agree entrywise.
bool isomorphism_check(const Multigraph& g, long t,
                       const AlgebraOptions& opts = {});

}  // namespace falg
