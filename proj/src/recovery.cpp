#include <falg/recovery.hpp>

#include <falg/errors.hpp>

#include <stdexcept>
#include <vector>

namespace falg {

long infer_edge_count(const HilbertFunction& h, long t) {
  if (t < 1) throw std::invalid_argument("t must be >= 1");
  const auto top = h.top_nonzero();
  if (!top) throw recovery_error("all dimensions are zero", -1);
  const long top_degree = static_cast<long>(*top);
  if (top_degree % t != 0)
    throw recovery_error(
        "top nonzero degree is not divisible by t (loops present or wrong t?)",
        top_degree);
  return top_degree / t;
}

RecoveredCounts recover_activity_counts(const HilbertFunction& h, long t) {
  const long e = infer_edge_count(h, t);

  Poly1 residual;
  for (std::size_t k = 0; k < h.dims.size(); ++k) {
    if (h.dims[k] == 0) continue;
    residual.add_term(t * e - static_cast<long>(k), h.dims[k]);
  }

  const Poly1 block = geometric_block(t, 0);  // 1 + ... + y^{t-1}
  std::vector<Poly1> block_pow{Poly1(Int(1))};

  RecoveredCounts out;
  out.inferred_edges = e;
  while (!residual.is_zero()) {
    for (const auto& [deg, c] : residual.terms())
      if (c < 0)
        throw recovery_error("negative coefficient in stripping residual",
                             deg);
    const long m = residual.low_degree();
    const Int s = residual.coefficient(m);
    const long a = m % t;
    const long b = m / t;
    out.counts[{a, b}] = s;

    while (static_cast<long>(block_pow.size()) <= a)
      block_pow.push_back(block_pow.back() * block);
    Poly1 stripped = block_pow[a].shifted(a + t * b);
    stripped *= s;
    residual -= stripped;
  }
  return out;
}

TuttePoly recover_tutte(const HilbertFunction& h, long t, int vertex_count) {
  if (vertex_count < 1)
    throw std::invalid_argument("vertex count must be >= 1");
  if (t < vertex_count)
    throw std::invalid_argument("recovery requires t >= vertex count");

  const RecoveredCounts rec = recover_activity_counts(h, t);

  Poly2 xm1 = Poly2::monomial(1, 0, Int(1));
  xm1.add_term(0, 0, Int(-1));
  std::vector<Poly2> xm1_pow{Poly2(Int(1))};
  for (int i = 1; i < vertex_count; ++i)
    xm1_pow.push_back(xm1_pow.back() * xm1);

  Poly2 out;
  for (const auto& [key, count] : rec.counts) {
    const auto [a, b] = key;
    if (a >= vertex_count)
      throw recovery_error(
          "recovered forest size exceeds n-1; input is not the Hilbert "
          "function of a connected graph on n vertices",
          a + t * b);
    Poly2 term = xm1_pow[vertex_count - 1 - a] * Poly2::monomial(0, b, count);
    out += term;
  }
  return TuttePoly{out, TutteProvenance::ActivityExpansion};
}

}  // namespace falg
