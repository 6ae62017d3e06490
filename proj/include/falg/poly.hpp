#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>

namespace falg {

using Int = mpz_class;
using Rat = mpq_class;

/// num/den in canonical form; den must be nonzero.
Rat make_rat(long num, long den);
Rat rat_pow(const Rat& base, unsigned long k);

/// Univariate polynomial over Int with nonnegative exponents.  Sparse
/// exponent map; zero coefficients are never stored.
class Poly1 {
 public:
  Poly1() = default;
  explicit Poly1(const Int& constant);
  static Poly1 monomial(long exp, Int coeff);

  bool is_zero() const { return terms_.empty(); }
  long degree() const;      // -1 for the zero polynomial
  long low_degree() const;  // -1 for the zero polynomial
  Int coefficient(long exp) const;
  Int coefficient_sum() const;
  const std::map<long, Int>& terms() const { return terms_; }

  void add_term(long exp, const Int& coeff);
  Poly1& operator+=(const Poly1& o);
  Poly1& operator-=(const Poly1& o);
  Poly1& operator*=(const Int& c);
  Poly1 operator*(const Poly1& o) const;
  Poly1 shifted(long k) const;  // multiply by y^k; k >= 0
  Poly1 pow(unsigned long k) const;

  Rat eval(const Rat& point) const;

  bool operator==(const Poly1&) const = default;

 private:
  std::map<long, Int> terms_;
};

Poly1 operator+(Poly1 a, const Poly1& b);
Poly1 operator-(Poly1 a, const Poly1& b);

/// Univariate Laurent polynomial: exponents may be negative.
class LaurentPoly1 {
 public:
  LaurentPoly1() = default;
  explicit LaurentPoly1(const Int& constant);
  static LaurentPoly1 monomial(long exp, Int coeff);
  static LaurentPoly1 from(const Poly1& p);

  bool is_zero() const { return terms_.empty(); }
  long degree() const;
  long low_degree() const;
  Int coefficient(long exp) const;
  const std::map<long, Int>& terms() const { return terms_; }

  void add_term(long exp, const Int& coeff);
  LaurentPoly1& operator+=(const LaurentPoly1& o);
  LaurentPoly1& operator*=(const Int& c);
  LaurentPoly1 operator*(const LaurentPoly1& o) const;
  LaurentPoly1 shifted(long k) const;  // multiply by y^k; any k
  LaurentPoly1 pow(unsigned long k) const;

  /// Exact value; point must be nonzero when negative exponents are present.
  Rat eval(const Rat& point) const;

  bool operator==(const LaurentPoly1&) const = default;

 private:
  std::map<long, Int> terms_;
};

/// Bivariate polynomial in (x, y), nonnegative exponents.
class Poly2 {
 public:
  using Key = std::pair<long, long>;  // (x exponent, y exponent)

  Poly2() = default;
  explicit Poly2(const Int& constant);
  static Poly2 monomial(long xexp, long yexp, Int coeff);

  bool is_zero() const { return terms_.empty(); }
  long x_degree() const;  // -1 for zero
  long y_degree() const;  // -1 for zero
  Int coefficient(long xexp, long yexp) const;
  Int coefficient_sum() const;
  const std::map<Key, Int>& terms() const { return terms_; }

  void add_term(long xexp, long yexp, const Int& coeff);
  Poly2& operator+=(const Poly2& o);
  Poly2& operator*=(const Int& c);
  Poly2 operator*(const Poly2& o) const;
  Poly2 pow(unsigned long k) const;

  Rat eval(const Rat& x, const Rat& y) const;

  bool operator==(const Poly2&) const = default;

 private:
  std::map<Key, Int> terms_;
};

Poly2 operator+(Poly2 a, const Poly2& b);

/// 1 + y + ... + y^{t-1} for low = 0, or y + ... + y^t for low = 1.
Poly1 geometric_block(long t, int low);

// Text rendering: terms in descending lexicographic exponent order, e.g.
// "x^2 + x + y" or "y^-1 + 1".
std::string to_text(const Poly1& p, const std::string& var = "y");
std::string to_text(const LaurentPoly1& p, const std::string& var = "y");
std::string to_text(const Poly2& p, const std::string& xvar = "x",
                    const std::string& yvar = "y");

}  // namespace falg
