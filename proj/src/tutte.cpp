#include <falg/tutte.hpp>

#include <falg/errors.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace falg {

namespace {

// Cheap canonical form used only as a memo key: BFS relabeling started from
// the (degree, id)-minimal vertex of each component, then the sorted edge
// multiset of the relabeled graph.  Keys that collide are genuinely
// isomorphic graphs (the key is the full relabeled edge list), which is all
// the cache needs; isomorphic graphs with different keys just miss.
std::vector<std::pair<int, int>> canonical_edges(const Multigraph& g) {
  const int n = g.vertex_count();
  std::vector<int> degree(n, 0);
  std::vector<std::vector<int>> adj(n);
  for (const auto& [a, b] : g.edges()) {
    degree[a]++;
    degree[b]++;
    if (a != b) {
      adj[a].push_back(b);
      adj[b].push_back(a);
    }
  }
  for (auto& list : adj) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int u, int v) {
    return std::pair(degree[u], u) < std::pair(degree[v], v);
  });

  std::vector<int> label(n, -1);
  int next = 0;
  for (int start : order) {
    if (label[start] != -1) continue;
    std::queue<int> queue;
    queue.push(start);
    label[start] = next++;
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop();
      for (int w : adj[v]) {
        if (label[w] != -1) continue;
        label[w] = next++;
        queue.push(w);
      }
    }
  }

  std::vector<std::pair<int, int>> edges;
  edges.reserve(g.edge_count());
  for (const auto& [a, b] : g.edges()) {
    const int la = label[a], lb = label[b];
    edges.emplace_back(std::min(la, lb), std::max(la, lb));
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

Poly2 times_y_poly(const Poly2& p, const Poly1& f) {
  Poly2 out;
  for (const auto& [fe, fc] : f.terms())
    for (const auto& [k, c] : p.terms()) out.add_term(k.first, k.second + fe, fc * c);
  return out;
}

struct Recursion {
  long loop_exponent;   // y power per loop: t for J, 1 for Tutte
  Poly1 contract_factor;  // 1+...+y^{t-1} for J, constant 1 for Tutte
  bool bridge_uses_x;   // Tutte: x * T(G-e); J: factor*J(G/e) + (x-1)*J(G-e)
  RecursionOptions opts;
  std::uint64_t nodes = 0;
  std::map<std::vector<std::pair<int, int>>, Poly2> memo;

  Poly2 run(const Multigraph& g) {
    if (++nodes > opts.max_nodes)
      throw budget_error("deletion-contraction recursion exceeds max-nodes budget (" +
                         std::to_string(opts.max_nodes) + ")");
    if (g.edge_count() == 0) return Poly2(Int(1));

    std::vector<std::pair<int, int>> key;
    if (opts.memoize) {
      key = canonical_edges(g);
      const auto it = memo.find(key);
      if (it != memo.end()) return it->second;
    }

    const EdgeRef e = g.edge_count() - 1;  // pivot: last edge in the order
    Poly2 result;
    switch (g.classify(e)) {
      case EdgeKind::Loop: {
        const Poly2 rest = run(g.deleted(e));
        result = Poly2::monomial(0, loop_exponent, Int(1)) * rest;
        break;
      }
      case EdgeKind::Bridge: {
        if (bridge_uses_x) {
          result = Poly2::monomial(1, 0, Int(1)) * run(g.deleted(e));
        } else {
          Poly2 xm1 = Poly2::monomial(1, 0, Int(1));
          xm1.add_term(0, 0, Int(-1));
          result = times_y_poly(run(g.contracted(e)), contract_factor) +
                   xm1 * run(g.deleted(e));
        }
        break;
      }
      case EdgeKind::Ordinary: {
        result = times_y_poly(run(g.contracted(e)), contract_factor) +
                 run(g.deleted(e));
        break;
      }
    }
    if (opts.memoize) memo.emplace(std::move(key), result);
    return result;
  }
};

Int binomial(long n, long k) {
  Int out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return out;
}

}  // namespace

TuttePoly tutte(const Multigraph& g, const RecursionOptions& opts) {
  Recursion rec{1, Poly1(Int(1)), true, opts};
  return TuttePoly{rec.run(g), TutteProvenance::DeletionContraction};
}

TuttePoly tutte_via_activity(const ActivityTable& table) {
  const long rank = table.v - table.c;
  Poly2 xm1 = Poly2::monomial(1, 0, Int(1));
  xm1.add_term(0, 0, Int(-1));
  std::vector<Poly2> xm1_pow{Poly2(Int(1))};
  for (long i = 1; i <= rank; ++i) xm1_pow.push_back(xm1_pow.back() * xm1);

  Poly2 out;
  for (const auto& [key, n] : table.counts) {
    const auto [a, b] = key;
    const long exponent = rank - static_cast<long>(a);
    if (exponent < 0)
      throw std::invalid_argument("forest larger than the graph rank");
    Poly2 term = xm1_pow[exponent] *
                 Poly2::monomial(0, static_cast<long>(b),
                                 Int(static_cast<unsigned long>(n)));
    out += term;
  }
  return TuttePoly{out, TutteProvenance::ActivityExpansion};
}

JPoly j_poly(const Multigraph& g, long t, const RecursionOptions& opts) {
  if (t < 1) throw std::invalid_argument("t must be >= 1");
  Recursion rec{t, geometric_block(t, 0), false, opts};
  return JPoly{rec.run(g), t};
}

bool j_poly_clone_check(const Multigraph& g, long t,
                        const RecursionOptions& opts) {
  const JPoly j = j_poly(g, t, opts);
  const TuttePoly cloned = tutte(clone_graph(g, t).graph, opts);
  return j.poly == cloned.poly;
}

LaurentPoly1 tutte_hilbert_series(const Multigraph& g, long t,
                                  const RecursionOptions& opts) {
  if (t < 1) throw std::invalid_argument("t must be >= 1");
  const TuttePoly T = tutte(g, opts);
  const long rank = g.vertex_count() - g.component_count();

  // z^{v-c} (1/(zy) + 1)^m y^{tb} expands to sum_j C(m,j) z^{v-c-j} y^{tb-j};
  // m <= x-degree <= v-c keeps every z power nonnegative.
  const LaurentPoly1 z = LaurentPoly1::from(geometric_block(t, 0));
  std::vector<LaurentPoly1> z_pow{LaurentPoly1(Int(1))};
  for (long i = 1; i <= rank; ++i) z_pow.push_back(z_pow.back() * z);

  LaurentPoly1 out;
  for (const auto& [key, c] : T.poly.terms()) {
    const auto [m, b] = key;
    if (m > rank)
      throw std::invalid_argument("Tutte x-degree exceeds the graph rank");
    for (long j = 0; j <= m; ++j) {
      LaurentPoly1 piece = z_pow[rank - j].shifted(t * b - j);
      piece *= c * binomial(m, j);
      out += piece;
    }
  }
  return out;
}

HilbertFunction hilbert_from_tutte(const Multigraph& g, long t,
                                   const RecursionOptions& opts) {
  const LaurentPoly1 series = tutte_hilbert_series(g, t, opts);
  const long rank = g.vertex_count() - g.component_count();
  const long top = t * static_cast<long>(g.edge_count());
  HilbertFunction h;
  h.t = t;
  h.dims.reserve(top + 1);
  for (long k = 0; k <= top; ++k)
    h.dims.push_back(series.coefficient(top - rank - k));
  return h;
}

namespace {

bool valid_sample(const Rat& q, long t) {
  if (q == 0 || q == 1) return false;
  // roots of y^{t+1} - y, i.e. y^t = 1 for nonzero y
  return rat_pow(q, static_cast<unsigned long>(t)) != 1;
}

}  // namespace

std::vector<Rat> lemma_sample_points(long t, std::size_t count) {
  std::vector<Rat> points;
  long next_int = 2;
  int phase = 0;
  while (points.size() < count) {
    Rat candidate;
    switch (phase) {
      case 0: candidate = Rat(next_int); break;
      case 1: candidate = Rat(-next_int); break;
      default:
        candidate = make_rat(2 * next_int - 3, 2);  // 1/2, 3/2, 5/2, ...
        ++next_int;
        break;
    }
    phase = (phase + 1) % 3;
    if (valid_sample(candidate, t)) points.push_back(candidate);
  }
  return points;
}

bool lemma_eq_check(const Multigraph& g, long t, const std::vector<Rat>& samples,
                    const RecursionOptions& opts) {
  if (t < 1) throw std::invalid_argument("t must be >= 1");
  for (const Rat& q : samples)
    if (!valid_sample(q, t))
      throw std::invalid_argument("forbidden sample point: " + q.get_str());

  const JPoly j = j_poly(g, t, opts);
  const TuttePoly T = tutte(g, opts);
  const long rank = g.vertex_count() - g.component_count();

  for (const Rat& q : samples) {
    const Rat lhs = j.poly.eval(Rat(1) + Rat(1) / q, q);

    const Rat qt = rat_pow(q, static_cast<unsigned long>(t));
    const Rat z = (qt - 1) / (q - 1);
    const Rat x_arg = (qt * q - 1) / (qt * q - q);
    const Rat rhs =
        rat_pow(z, static_cast<unsigned long>(rank)) * T.poly.eval(x_arg, qt);
    if (lhs != rhs) return false;
  }
  return true;
}

}  // namespace falg
