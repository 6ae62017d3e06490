#include <falg/multigraph.hpp>

#include <falg/errors.hpp>

#include <algorithm>
#include <fstream>
#include <istream>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace falg {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }

  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    return true;
  }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
};

}  // namespace

Multigraph::Multigraph(int vertex_count, std::vector<Edge> edges)
    : n_(vertex_count), edges_(std::move(edges)) {
  if (n_ < 0) throw std::invalid_argument("negative vertex count");
  for (const auto& [a, b] : edges_) {
    if (a < 0 || b < 0 || a >= n_ || b >= n_)
      throw std::invalid_argument("edge endpoint out of range");
  }
}

void Multigraph::check_edge(EdgeRef e) const {
  if (e >= edges_.size()) throw std::invalid_argument("edge index out of range");
}

Multigraph::Edge Multigraph::edge(EdgeRef e) const {
  check_edge(e);
  return edges_[e];
}

bool Multigraph::is_loop(EdgeRef e) const {
  check_edge(e);
  return edges_[e].first == edges_[e].second;
}

int Multigraph::component_count() const {
  if (n_ == 0) return 0;
  DisjointSets ds(n_);
  int components = n_;
  for (const auto& [a, b] : edges_)
    if (ds.unite(a, b)) --components;
  return components;
}

Multigraph Multigraph::deleted(EdgeRef e) const {
  check_edge(e);
  std::vector<Edge> out;
  out.reserve(edges_.size() - 1);
  for (std::size_t i = 0; i < edges_.size(); ++i)
    if (i != e) out.push_back(edges_[i]);
  return Multigraph(n_, std::move(out));
}

Multigraph Multigraph::contracted(EdgeRef e) const {
  check_edge(e);
  const auto [a, b] = edges_[e];
  if (a == b) throw std::invalid_argument("cannot contract a loop");
  const int keep = std::min(a, b);
  const int gone = std::max(a, b);
  const auto relabel = [&](int v) {
    if (v == gone) return keep;
    return v > gone ? v - 1 : v;
  };
  std::vector<Edge> out;
  out.reserve(edges_.size() - 1);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (i == e) continue;
    out.emplace_back(relabel(edges_[i].first), relabel(edges_[i].second));
  }
  return Multigraph(n_ - 1, std::move(out));
}

EdgeKind Multigraph::classify(EdgeRef e) const {
  check_edge(e);
  const auto [a, b] = edges_[e];
  if (a == b) return EdgeKind::Loop;
  DisjointSets ds(n_);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (i == e) continue;
    ds.unite(edges_[i].first, edges_[i].second);
  }
  return ds.find(a) == ds.find(b) ? EdgeKind::Ordinary : EdgeKind::Bridge;
}

Multigraph Multigraph::with_extra_loop(int vertex) const {
  if (vertex < 0 || vertex >= n_)
    throw std::invalid_argument("loop vertex out of range");
  std::vector<Edge> out = edges_;
  out.emplace_back(vertex, vertex);
  return Multigraph(n_, std::move(out));
}

EdgeRef CloneMap::clone_index(EdgeRef original, long label) const {
  if (original >= original_edge_count || label < 1 || label > t)
    throw std::invalid_argument("clone address out of range");
  return original * static_cast<std::size_t>(t) +
         static_cast<std::size_t>(label - 1);
}

std::pair<EdgeRef, long> CloneMap::original_of(EdgeRef clone) const {
  if (clone >= original_edge_count * static_cast<std::size_t>(t))
    throw std::invalid_argument("clone index out of range");
  return {clone / static_cast<std::size_t>(t),
          static_cast<long>(clone % static_cast<std::size_t>(t)) + 1};
}

CloneGraph clone_graph(const Multigraph& g, long t) {
  if (t < 1) throw std::invalid_argument("clone factor t must be >= 1");
  std::vector<Multigraph::Edge> edges;
  edges.reserve(g.edge_count() * static_cast<std::size_t>(t));
  for (const auto& e : g.edges())
    for (long label = 1; label <= t; ++label) edges.push_back(e);
  return CloneGraph{Multigraph(g.vertex_count(), std::move(edges)),
                    CloneMap{t, g.edge_count()}};
}

Multigraph permuted_edges(const Multigraph& g,
                          const std::vector<std::size_t>& order) {
  if (order.size() != g.edge_count())
    throw std::invalid_argument("permutation size mismatch");
  std::vector<bool> seen(order.size(), false);
  std::vector<Multigraph::Edge> edges;
  edges.reserve(order.size());
  for (std::size_t pos : order) {
    if (pos >= order.size() || seen[pos])
      throw std::invalid_argument("not a permutation of the edge set");
    seen[pos] = true;
    edges.push_back(g.edges()[pos]);
  }
  return Multigraph(g.vertex_count(), std::move(edges));
}

namespace {

std::string_view trimmed_view(const std::string& line) {
  std::size_t begin = line.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return {};
  std::size_t end = line.find_last_not_of(" \t\r");
  return std::string_view(line).substr(begin, end - begin + 1);
}

}  // namespace

Multigraph parse_graph(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  long n = -1, m = -1;
  std::vector<Multigraph::Edge> edges;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string_view sv = trimmed_view(line);
    if (sv.empty() || sv.front() == '#') continue;
    std::istringstream ss{std::string(sv)};
    if (n < 0) {
      if (!(ss >> n >> m)) throw parse_error("expected header \"n m\"", lineno);
      if (!(ss >> std::ws).eof()) throw parse_error("trailing junk after header", lineno);
      if (n < 0 || m < 0) throw parse_error("negative counts in header", lineno);
    } else {
      if (static_cast<long>(edges.size()) >= m)
        throw parse_error("more edges than declared", lineno);
      long a = 0, b = 0;
      if (!(ss >> a >> b)) throw parse_error("expected edge \"a b\"", lineno);
      if (!(ss >> std::ws).eof()) throw parse_error("trailing junk after edge", lineno);
      if (a < 0 || b < 0 || a >= n || b >= n)
        throw parse_error("edge endpoint out of range", lineno);
      edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
    }
  }
  if (n < 0) throw parse_error("missing header \"n m\"", lineno ? lineno : 1);
  if (static_cast<long>(edges.size()) != m)
    throw parse_error("fewer edges than declared", lineno ? lineno : 1);
  return Multigraph(static_cast<int>(n), std::move(edges));
}

Multigraph parse_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file: " + path);
  return parse_graph(in);
}

std::string format_graph(const Multigraph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& [a, b] : g.edges()) out << a << ' ' << b << '\n';
  return out.str();
}

}  // namespace falg
