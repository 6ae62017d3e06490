#pragma once

#include <falg/hilbert.hpp>
#include <falg/multigraph.hpp>
#include <falg/poly.hpp>

#include <cstdint>
#include <functional>
#include <map>
#include <utility>
#include <vector>

namespace falg {

/// A spanning subforest together with its external activity.  An edge e
/// outside F is externally active when F + e contains a cycle and e is the
/// minimum-index edge of that cycle; loops are always active.
struct ForestRecord {
  std::vector<EdgeRef> edge_set;    // ascending edge indices, acyclic
  std::size_t activity = 0;         // |active_set|
  std::vector<EdgeRef> active_set;  // externally active edges, ascending

  std::size_t size() const { return edge_set.size(); }
};

/// Aggregated forest counts N[a][b] = #{F : |F| = a, act(F) = b}.
struct ActivityTable {
  int v = 0;
  std::size_t e = 0;
  int c = 0;
  std::map<std::pair<std::size_t, std::size_t>, std::uint64_t> counts;

  std::uint64_t total() const;
};

struct EnumerationOptions {
  std::uint64_t max_forests = 10'000'000;
};

/// Visits every subforest in lexicographic edge-subset order; throws
/// budget_error past opts.max_forests.
void for_each_subforest(const Multigraph& g, const EnumerationOptions& opts,
                        const std::function<void(const ForestRecord&)>& visit);

std::vector<ForestRecord> enumerate_subforests(
    const Multigraph& g, const EnumerationOptions& opts = {});

/// (activity, active edge set) of an acyclic edge subset; rejects cyclic or
/// duplicated input edges.
std::pair<std::size_t, std::vector<EdgeRef>> external_activity(
    const Multigraph& g, std::vector<EdgeRef> forest);

ActivityTable activity_table(const Multigraph& g,
                             const EnumerationOptions& opts = {});

/// P(y) = sum over t-labeled forests of y^{weight + t*act}; equivalently
/// sum_{a,b} N[a][b] (y + ... + y^t)^a y^{t b}.
Poly1 weight_gf(const ActivityTable& table, long t);

/// dim_k = #{t-labeled forests F with weight t*(e - act(F)) - k}
///       = coefficient of y^{t*e - k} in weight_gf.
HilbertFunction hilbert_from_forests(const Multigraph& g, long t,
                                     const EnumerationOptions& opts = {});

struct CloneActivityViolation {
  std::vector<EdgeRef> edge_set;
  std::vector<long> labels;
  std::size_t clone_activity = 0;
  std::size_t expected = 0;
};

struct CloneActivityReport {
  std::uint64_t checked = 0;
  std::vector<CloneActivityViolation> violations;
  bool ok() const { return violations.empty(); }
};

/// Maps every t-labeled forest through the clone bijection and verifies
/// act(clone image) = t*act(F) + weight(F) - |F| on the clone graph.
CloneActivityReport clone_activity_check(const Multigraph& g, long t,
                                         const EnumerationOptions& opts = {});

}  // namespace falg
