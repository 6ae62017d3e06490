#pragma once

#include <falg/forests.hpp>
#include <falg/hilbert.hpp>
#include <falg/multigraph.hpp>
#include <falg/poly.hpp>

#include <cstdint>
#include <vector>

namespace falg {

enum class TutteProvenance { DeletionContraction, ActivityExpansion, CloneOf };

struct TuttePoly {
  Poly2 poly;
  TutteProvenance provenance = TutteProvenance::DeletionContraction;
};

/// Tutte polynomial of the clone graph, computed directly on g by the
/// modified deletion-contraction recurrence.
struct JPoly {
  Poly2 poly;
  long t = 1;
};

struct RecursionOptions {
  bool memoize = true;            // cache keyed by a cheap canonical form
  std::uint64_t max_nodes = 1ull << 22;  // recursion node budget
};

/// Deletion-contraction Tutte polynomial; pivots on the last edge in the
/// current order.  Edgeless graphs give 1.
TuttePoly tutte(const Multigraph& g, const RecursionOptions& opts = {});

/// Activity expansion: sum over (a, b) of N[a][b] (x-1)^{(v-c)-a} y^b.
TuttePoly tutte_via_activity(const ActivityTable& table);

/// Four-case recurrence: y^t per loop; (1+...+y^{t-1}) J(G/e) + (x-1) J(G-e)
/// per bridge; (1+...+y^{t-1}) J(G/e) + J(G-e) otherwise.
JPoly j_poly(const Multigraph& g, long t, const RecursionOptions& opts = {});

/// Whether j_poly(g, t) equals tutte(clone_graph(g, t)) coefficientwise.
bool j_poly_clone_check(const Multigraph& g, long t,
                        const RecursionOptions& opts = {});

/// The exact Laurent expansion of z^{v-c} T(1/(z y) + 1, y^t) with
/// z = 1 + y + ... + y^{t-1}, expanded term by term over the integers.
LaurentPoly1 tutte_hilbert_series(const Multigraph& g, long t,
                                  const RecursionOptions& opts = {});

/// dim_k = coefficient of y^{t*e - (v-c) - k} in tutte_hilbert_series.
HilbertFunction hilbert_from_tutte(const Multigraph& g, long t,
                                   const RecursionOptions& opts = {});

/// Deterministic sample points avoiding 0, 1 and roots of y^{t+1} - y.
std::vector<Rat> lemma_sample_points(long t, std::size_t count);

/// Exact evaluation of J(1 + 1/y, y) against z^{v-c} T((y^{t+1}-1)/(y^{t+1}-y), y^t)
/// at each sample; with t*e+1 distinct samples equality certifies the
/// polynomial identity.
bool lemma_eq_check(const Multigraph& g, long t, const std::vector<Rat>& samples,
                    const RecursionOptions& opts = {});

}  // namespace falg
