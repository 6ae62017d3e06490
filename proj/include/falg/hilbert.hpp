#pragma once

#include <falg/poly.hpp>

#include <cstddef>
#include <optional>
#include <vector>

namespace falg {

/// Graded dimensions dim_0 .. dim_{t*e(G)} of a forest algebra.  All four
/// computation methods return vectors of this full padded length so they can
/// be compared entrywise.
struct HilbertFunction {
  long t = 1;
  std::vector<Int> dims;

  bool operator==(const HilbertFunction&) const = default;

  std::optional<std::size_t> top_nonzero() const {
    for (std::size_t i = dims.size(); i > 0; --i)
      if (dims[i - 1] != 0) return i - 1;
    return std::nullopt;
  }

  Int total() const {
    Int s(0);
    for (const auto& d : dims) s += d;
    return s;
  }
};

/// Equality after stripping trailing zeros; used where e(G) changes (adding
/// a loop pads the vector) but the graded dimensions must not.
inline bool equal_up_to_padding(const HilbertFunction& a,
                                const HilbertFunction& b) {
  if (a.t != b.t) return false;
  const std::size_t n = std::max(a.dims.size(), b.dims.size());
  for (std::size_t i = 0; i < n; ++i) {
    const Int va = i < a.dims.size() ? a.dims[i] : Int(0);
    const Int vb = i < b.dims.size() ? b.dims[i] : Int(0);
    if (va != vb) return false;
  }
  return true;
}

}  // namespace falg
