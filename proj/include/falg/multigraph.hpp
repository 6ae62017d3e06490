#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace falg {

// Position of an edge in the fixed edge order.
using EdgeRef = std::size_t;

enum class EdgeKind { Loop, Bridge, Ordinary };

/// Undirected multigraph; parallel edges and loops allowed.  The edge list
/// order is the linear order used for external activity and for recursion
/// pivots, and every operation preserves the relative order of the surviving
/// edges.  Values are immutable after construction.
class Multigraph {
 public:
  using Edge = std::pair<int, int>;  // endpoints; equal endpoints = loop

  Multigraph() = default;
  Multigraph(int vertex_count, std::vector<Edge> edges);

  int vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  Edge edge(EdgeRef e) const;
  bool is_loop(EdgeRef e) const;

  /// Number of connected components; isolated vertices count.
  int component_count() const;

  /// Same vertices, edge e removed.
  Multigraph deleted(EdgeRef e) const;

  /// Endpoints of e merged into the smaller id (higher ids shift down by
  /// one); e removed, all other edges kept.  Rejects loops.
  Multigraph contracted(EdgeRef e) const;

  EdgeKind classify(EdgeRef e) const;

  /// Copy with one extra loop appended at `vertex`.
  Multigraph with_extra_loop(int vertex) const;

  bool operator==(const Multigraph&) const = default;

 private:
  void check_edge(EdgeRef e) const;

  int n_ = 0;
  std::vector<Edge> edges_;
};

/// Addressing for the edge-clone expansion: every original edge i becomes t
/// consecutive parallel copies with labels 1..t, block i occupying positions
/// i*t .. i*t+t-1, so clone order refines the original edge order.
struct CloneMap {
  long t = 1;
  std::size_t original_edge_count = 0;

  EdgeRef clone_index(EdgeRef original, long label) const;
  std::pair<EdgeRef, long> original_of(EdgeRef clone) const;
};

struct CloneGraph {
  Multigraph graph;
  CloneMap map;
};

CloneGraph clone_graph(const Multigraph& g, long t);

/// New graph whose edge i is g's edge order[i]; order must be a permutation.
Multigraph permuted_edges(const Multigraph& g,
                          const std::vector<std::size_t>& order);

// Text format: header "n m", then m lines "a b" (0-based endpoints) in edge
// order; lines starting with '#' are comments.
Multigraph parse_graph(std::istream& in);
Multigraph parse_graph_file(const std::string& path);
std::string format_graph(const Multigraph& g);

}  // namespace falg
