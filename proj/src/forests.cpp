#include <falg/forests.hpp>

#include <falg/errors.hpp>

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace falg {

namespace {

// Union-find without path compression so that unions can be undone during
// backtracking enumeration.
class RollbackUnionFind {
 public:
  explicit RollbackUnionFind(int n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int v) const {
    while (parent_[v] != v) v = parent_[v];
    return v;
  }

  bool same(int a, int b) const { return find(a) == find(b); }

  // Precondition: find(a) != find(b).
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    trail_.push_back(b);
  }

  void undo() {
    const int b = trail_.back();
    trail_.pop_back();
    size_[parent_[b]] -= size_[b];
    parent_[b] = b;
  }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
  std::vector<int> trail_;
};

// Activity of an acyclic edge set, scanning every non-forest edge.  The
// unique cycle of F + e is the forest path between e's endpoints plus e, so
// e is active iff its index is below every edge index on that path.
std::pair<std::size_t, std::vector<EdgeRef>> activity_of(
    const Multigraph& g, const std::vector<EdgeRef>& forest) {
  const int n = g.vertex_count();
  std::vector<std::vector<std::pair<int, EdgeRef>>> adj(n);
  std::vector<bool> in_forest(g.edge_count(), false);
  for (EdgeRef f : forest) {
    in_forest[f] = true;
    const auto [a, b] = g.edges()[f];
    adj[a].emplace_back(b, f);
    adj[b].emplace_back(a, f);
  }

  std::vector<int> parent_vertex(n);
  std::vector<EdgeRef> parent_edge(n);
  std::vector<int> visited(n, -1);
  int stamp = 0;

  std::vector<EdgeRef> active;
  for (EdgeRef e = 0; e < g.edge_count(); ++e) {
    if (in_forest[e]) continue;
    const auto [a, b] = g.edges()[e];
    if (a == b) {
      active.push_back(e);  // a loop is a cycle of its own
      continue;
    }
    // DFS from a looking for b along forest edges.
    ++stamp;
    visited[a] = stamp;
    parent_vertex[a] = -1;
    std::vector<int> stack{a};
    bool reached = false;
    while (!stack.empty() && !reached) {
      const int v = stack.back();
      stack.pop_back();
      for (const auto& [w, f] : adj[v]) {
        if (visited[w] == stamp) continue;
        visited[w] = stamp;
        parent_vertex[w] = v;
        parent_edge[w] = f;
        if (w == b) {
          reached = true;
          break;
        }
        stack.push_back(w);
      }
    }
    if (!reached) continue;  // no cycle through e
    EdgeRef path_min = g.edge_count();
    for (int v = b; parent_vertex[v] != -1; v = parent_vertex[v])
      path_min = std::min(path_min, parent_edge[v]);
    if (e < path_min) active.push_back(e);
  }
  return {active.size(), active};
}

}  // namespace

std::uint64_t ActivityTable::total() const {
  std::uint64_t s = 0;
  for (const auto& [key, n] : counts) s += n;
  return s;
}

void for_each_subforest(const Multigraph& g, const EnumerationOptions& opts,
                        const std::function<void(const ForestRecord&)>& visit) {
  RollbackUnionFind uf(g.vertex_count());
  std::vector<EdgeRef> current;
  std::uint64_t count = 0;

  const auto emit = [&]() {
    if (++count > opts.max_forests)
      throw budget_error("subforest enumeration exceeds max-forests cap (" +
                         std::to_string(opts.max_forests) + ")");
    ForestRecord rec;
    rec.edge_set = current;
    auto [act, active] = activity_of(g, current);
    rec.activity = act;
    rec.active_set = std::move(active);
    visit(rec);
  };

  // Lexicographic order over edge subsets: visit the current set, then try
  // every larger edge index in turn.
  const std::function<void(EdgeRef)> rec = [&](EdgeRef next) {
    emit();
    for (EdgeRef i = next; i < g.edge_count(); ++i) {
      const auto [a, b] = g.edges()[i];
      if (a == b || uf.same(a, b)) continue;
      uf.unite(a, b);
      current.push_back(i);
      rec(i + 1);
      current.pop_back();
      uf.undo();
    }
  };
  rec(0);
}

std::vector<ForestRecord> enumerate_subforests(const Multigraph& g,
                                               const EnumerationOptions& opts) {
  std::vector<ForestRecord> out;
  for_each_subforest(g, opts, [&](const ForestRecord& r) { out.push_back(r); });
  return out;
}

std::pair<std::size_t, std::vector<EdgeRef>> external_activity(
    const Multigraph& g, std::vector<EdgeRef> forest) {
  std::sort(forest.begin(), forest.end());
  RollbackUnionFind uf(g.vertex_count());
  for (std::size_t i = 0; i < forest.size(); ++i) {
    const EdgeRef f = forest[i];
    if (f >= g.edge_count()) throw std::invalid_argument("edge index out of range");
    if (i > 0 && forest[i - 1] == f)
      throw std::invalid_argument("duplicate edge in forest");
    const auto [a, b] = g.edges()[f];
    if (a == b || uf.same(a, b))
      throw std::invalid_argument("edge set is not acyclic");
    uf.unite(a, b);
  }
  return activity_of(g, forest);
}

ActivityTable activity_table(const Multigraph& g,
                             const EnumerationOptions& opts) {
  ActivityTable table;
  table.v = g.vertex_count();
  table.e = g.edge_count();
  table.c = g.component_count();
  for_each_subforest(g, opts, [&](const ForestRecord& r) {
    ++table.counts[{r.size(), r.activity}];
  });
  return table;
}

Poly1 weight_gf(const ActivityTable& table, long t) {
  if (t < 1) throw std::invalid_argument("t must be >= 1");
  const Poly1 block = geometric_block(t, 1);  // y + ... + y^t
  std::vector<Poly1> block_pow{Poly1(Int(1))};
  Poly1 out;
  for (const auto& [key, n] : table.counts) {
    const auto [a, b] = key;
    while (block_pow.size() <= a) block_pow.push_back(block_pow.back() * block);
    Poly1 term = block_pow[a].shifted(t * static_cast<long>(b));
    term *= Int(static_cast<unsigned long>(n));
    out += term;
  }
  return out;
}

HilbertFunction hilbert_from_forests(const Multigraph& g, long t,
                                     const EnumerationOptions& opts) {
  if (t < 1) throw std::invalid_argument("t must be >= 1");
  const Poly1 gf = weight_gf(activity_table(g, opts), t);
  const long top = t * static_cast<long>(g.edge_count());
  HilbertFunction h;
  h.t = t;
  h.dims.reserve(top + 1);
  for (long k = 0; k <= top; ++k) h.dims.push_back(gf.coefficient(top - k));
  return h;
}

CloneActivityReport clone_activity_check(const Multigraph& g, long t,
                                         const EnumerationOptions& opts) {
  if (t < 1) throw std::invalid_argument("t must be >= 1");
  const CloneGraph cg = clone_graph(g, t);
  CloneActivityReport report;

  for_each_subforest(g, opts, [&](const ForestRecord& r) {
    std::vector<long> labels(r.size(), 1);
    std::vector<EdgeRef> clone_forest(r.size());
    while (true) {
      long weight = 0;
      for (std::size_t i = 0; i < r.size(); ++i) {
        weight += labels[i];
        clone_forest[i] = cg.map.clone_index(r.edge_set[i], labels[i]);
      }
      if (++report.checked > opts.max_forests)
        throw budget_error("labeled-forest enumeration exceeds max-forests cap (" +
                           std::to_string(opts.max_forests) + ")");
      const auto [act, active] = activity_of(cg.graph, clone_forest);
      (void)active;
      const std::size_t expected =
          static_cast<std::size_t>(t) * r.activity +
          static_cast<std::size_t>(weight) - r.size();
      if (act != expected)
        report.violations.push_back(
            {r.edge_set, labels, act, expected});
      // next label vector
      std::size_t i = 0;
      for (; i < labels.size(); ++i) {
        if (labels[i] < t) {
          ++labels[i];
          break;
        }
        labels[i] = 1;
      }
      if (i == labels.size()) break;
    }
  });
  return report;
}

}  // namespace falg
