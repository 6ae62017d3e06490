#pragma once

#include <falg/hilbert.hpp>
#include <falg/tutte.hpp>

#include <map>
#include <utility>

namespace falg {

/// Forest counts read back from a Hilbert function.
struct RecoveredCounts {
  std::map<std::pair<long, long>, Int> counts;  // (|F|, activity) -> N
  long inferred_edges = 0;
};

/// e(G) from the top nonzero degree (which is t*e for a loop-free graph);
/// non-divisibility signals a violated precondition such as loops.
long infer_edge_count(const HilbertFunction& h, long t);

/// Greedy stripping of Q(y) = sum_k dim_k y^{t*e-k}: the minimal-degree term
/// s y^m belongs to the forests with |F| = m mod t, act = floor(m/t) (the
/// decomposition is injective because |F| < t when t >= n), so subtract
/// s (1+...+y^{t-1})^{|F|} y^{|F|+t*act} and repeat until zero.
RecoveredCounts recover_activity_counts(const HilbertFunction& h, long t);

/// Tutte polynomial of the connected n-vertex source graph:
/// sum N[a][b] (x-1)^{n-1-a} y^b.  Requires t >= n.
TuttePoly recover_tutte(const HilbertFunction& h, long t, int vertex_count);

}  // namespace falg
