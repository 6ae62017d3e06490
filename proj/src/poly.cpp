#include <falg/poly.hpp>

#include <sstream>
#include <stdexcept>
#include <vector>

namespace falg {

Rat make_rat(long num, long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Rat rat_pow(const Rat& base, unsigned long k) {
  Rat result(1);
  Rat b = base;
  while (k > 0) {
    if (k & 1ul) result *= b;
    b *= b;
    k >>= 1;
  }
  return result;
}

// ---------------------------------------------------------------------------
// Poly1

Poly1::Poly1(const Int& constant) {
  if (constant != 0) terms_[0] = constant;
}

Poly1 Poly1::monomial(long exp, Int coeff) {
  Poly1 p;
  p.add_term(exp, coeff);
  return p;
}

long Poly1::degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first; }
long Poly1::low_degree() const { return terms_.empty() ? -1 : terms_.begin()->first; }

Int Poly1::coefficient(long exp) const {
  const auto it = terms_.find(exp);
  return it == terms_.end() ? Int(0) : it->second;
}

Int Poly1::coefficient_sum() const {
  Int s(0);
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

void Poly1::add_term(long exp, const Int& coeff) {
  if (exp < 0) throw std::invalid_argument("negative exponent in Poly1");
  if (coeff == 0) return;
  auto it = terms_.find(exp);
  if (it == terms_.end()) {
    terms_.emplace(exp, coeff);
  } else {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly1& Poly1::operator+=(const Poly1& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Poly1& Poly1::operator-=(const Poly1& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, Int(-c));
  return *this;
}

Poly1& Poly1::operator*=(const Int& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Poly1 Poly1::operator*(const Poly1& o) const {
  Poly1 out;
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) out.add_term(ea + eb, ca * cb);
  return out;
}

Poly1 Poly1::shifted(long k) const {
  if (k < 0) throw std::invalid_argument("negative shift in Poly1");
  Poly1 out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e + k, c);
  return out;
}

Poly1 Poly1::pow(unsigned long k) const {
  Poly1 result(Int(1));
  Poly1 b = *this;
  while (k > 0) {
    if (k & 1ul) result = result * b;
    b = b * b;
    k >>= 1;
  }
  return result;
}

Rat Poly1::eval(const Rat& point) const {
  Rat sum(0);
  for (const auto& [e, c] : terms_)
    sum += Rat(c) * rat_pow(point, static_cast<unsigned long>(e));
  return sum;
}

Poly1 operator+(Poly1 a, const Poly1& b) {
  a += b;
  return a;
}

Poly1 operator-(Poly1 a, const Poly1& b) {
  a -= b;
  return a;
}

// ---------------------------------------------------------------------------
// LaurentPoly1

LaurentPoly1::LaurentPoly1(const Int& constant) {
  if (constant != 0) terms_[0] = constant;
}

LaurentPoly1 LaurentPoly1::monomial(long exp, Int coeff) {
  LaurentPoly1 p;
  p.add_term(exp, coeff);
  return p;
}

LaurentPoly1 LaurentPoly1::from(const Poly1& p) {
  LaurentPoly1 out;
  for (const auto& [e, c] : p.terms()) out.terms_.emplace(e, c);
  return out;
}

long LaurentPoly1::degree() const {
  return terms_.empty() ? -1 : terms_.rbegin()->first;
}
long LaurentPoly1::low_degree() const {
  return terms_.empty() ? -1 : terms_.begin()->first;
}

Int LaurentPoly1::coefficient(long exp) const {
  const auto it = terms_.find(exp);
  return it == terms_.end() ? Int(0) : it->second;
}

void LaurentPoly1::add_term(long exp, const Int& coeff) {
  if (coeff == 0) return;
  auto it = terms_.find(exp);
  if (it == terms_.end()) {
    terms_.emplace(exp, coeff);
  } else {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly1& LaurentPoly1::operator+=(const LaurentPoly1& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly1& LaurentPoly1::operator*=(const Int& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

LaurentPoly1 LaurentPoly1::operator*(const LaurentPoly1& o) const {
  LaurentPoly1 out;
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) out.add_term(ea + eb, ca * cb);
  return out;
}

LaurentPoly1 LaurentPoly1::shifted(long k) const {
  LaurentPoly1 out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e + k, c);
  return out;
}

LaurentPoly1 LaurentPoly1::pow(unsigned long k) const {
  LaurentPoly1 result(Int(1));
  LaurentPoly1 b = *this;
  while (k > 0) {
    if (k & 1ul) result = result * b;
    b = b * b;
    k >>= 1;
  }
  return result;
}

Rat LaurentPoly1::eval(const Rat& point) const {
  Rat sum(0);
  for (const auto& [e, c] : terms_) {
    if (e >= 0) {
      sum += Rat(c) * rat_pow(point, static_cast<unsigned long>(e));
    } else {
      if (point == 0)
        throw std::invalid_argument("Laurent evaluation at zero");
      sum += Rat(c) / rat_pow(point, static_cast<unsigned long>(-e));
    }
  }
  return sum;
}

// ---------------------------------------------------------------------------
// Poly2

Poly2::Poly2(const Int& constant) {
  if (constant != 0) terms_[{0, 0}] = constant;
}

Poly2 Poly2::monomial(long xexp, long yexp, Int coeff) {
  Poly2 p;
  p.add_term(xexp, yexp, coeff);
  return p;
}

long Poly2::x_degree() const {
  long d = -1;
  for (const auto& [k, c] : terms_) d = std::max(d, k.first);
  return d;
}

long Poly2::y_degree() const {
  long d = -1;
  for (const auto& [k, c] : terms_) d = std::max(d, k.second);
  return d;
}

Int Poly2::coefficient(long xexp, long yexp) const {
  const auto it = terms_.find({xexp, yexp});
  return it == terms_.end() ? Int(0) : it->second;
}

Int Poly2::coefficient_sum() const {
  Int s(0);
  for (const auto& [k, c] : terms_) s += c;
  return s;
}

void Poly2::add_term(long xexp, long yexp, const Int& coeff) {
  if (xexp < 0 || yexp < 0)
    throw std::invalid_argument("negative exponent in Poly2");
  if (coeff == 0) return;
  const Key key{xexp, yexp};
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, coeff);
  } else {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly2& Poly2::operator+=(const Poly2& o) {
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
  return *this;
}

Poly2& Poly2::operator*=(const Int& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

Poly2 Poly2::operator*(const Poly2& o) const {
  Poly2 out;
  for (const auto& [ka, ca] : terms_)
    for (const auto& [kb, cb] : o.terms_)
      out.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
  return out;
}

Poly2 Poly2::pow(unsigned long k) const {
  Poly2 result(Int(1));
  Poly2 b = *this;
  while (k > 0) {
    if (k & 1ul) result = result * b;
    b = b * b;
    k >>= 1;
  }
  return result;
}

Rat Poly2::eval(const Rat& x, const Rat& y) const {
  Rat sum(0);
  for (const auto& [k, c] : terms_)
    sum += Rat(c) * rat_pow(x, static_cast<unsigned long>(k.first)) *
           rat_pow(y, static_cast<unsigned long>(k.second));
  return sum;
}

Poly2 operator+(Poly2 a, const Poly2& b) {
  a += b;
  return a;
}

Poly1 geometric_block(long t, int low) {
  if (t < 1) throw std::invalid_argument("geometric_block requires t >= 1");
  if (low != 0 && low != 1)
    throw std::invalid_argument("geometric_block low must be 0 or 1");
  Poly1 p;
  for (long e = low; e < t + low; ++e) p.add_term(e, Int(1));
  return p;
}

// ---------------------------------------------------------------------------
// Text rendering

namespace {

std::string power_text(const std::string& var, long e) {
  if (e == 0) return "";
  if (e == 1) return var;
  return var + "^" + std::to_string(e);
}

void append_term(std::ostringstream& out, bool first, const Int& coeff,
                 const std::string& vars) {
  const bool negative = coeff < 0;
  Int mag = negative ? Int(-coeff) : coeff;
  if (first) {
    if (negative) out << "-";
  } else {
    out << (negative ? " - " : " + ");
  }
  if (vars.empty()) {
    out << mag.get_str();
  } else if (mag == 1) {
    out << vars;
  } else {
    out << mag.get_str() << vars;
  }
}

template <typename Terms, typename VarFn>
std::string render(const Terms& terms, VarFn vars_of) {
  if (terms.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    append_term(out, first, it->second, vars_of(it->first));
    first = false;
  }
  return out.str();
}

}  // namespace

std::string to_text(const Poly1& p, const std::string& var) {
  return render(p.terms(), [&](long e) { return power_text(var, e); });
}

std::string to_text(const LaurentPoly1& p, const std::string& var) {
  return render(p.terms(), [&](long e) { return power_text(var, e); });
}

std::string to_text(const Poly2& p, const std::string& xvar,
                    const std::string& yvar) {
  return render(p.terms(), [&](const Poly2::Key& k) {
    return power_text(xvar, k.first) + power_text(yvar, k.second);
  });
}

}  // namespace falg
