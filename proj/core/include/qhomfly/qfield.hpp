#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qhomfly {

using Integer = mpz_class;

// Laurent polynomial in q with integer coefficients.
// Stored densely from the lowest nonzero exponent; the zero polynomial is empty.
class LaurentQ {
 public:
  LaurentQ() = default;
  LaurentQ(long c);  // NOLINT(google-explicit-constructor)
  explicit LaurentQ(const Integer& c);

  static LaurentQ monomial(const Integer& c, int exponent);
  static LaurentQ q_power(int exponent) { return monomial(1, exponent); }
  static LaurentQ from_dense(int low, std::vector<Integer> coeffs);
  static LaurentQ from_terms(const std::map<int, Integer>& terms);

  bool is_zero() const { return c_.empty(); }
  bool is_one() const;
  bool is_constant() const { return c_.size() == 1 && low_ == 0; }
  bool is_monomial() const { return c_.size() == 1; }
  int low() const { return low_; }
  int high() const { return low_ + static_cast<int>(c_.size()) - 1; }
  std::size_t size() const { return c_.size(); }
  const std::vector<Integer>& dense() const { return c_; }
  Integer coeff(int exponent) const;
  const Integer& leading() const { return c_.back(); }
  const Integer& trailing() const { return c_.front(); }
  std::map<int, Integer> terms() const;

  LaurentQ& operator+=(const LaurentQ& o);
  LaurentQ& operator-=(const LaurentQ& o);
  LaurentQ& operator*=(const LaurentQ& o);
  LaurentQ& operator*=(const Integer& c);
  LaurentQ operator-() const;
  friend LaurentQ operator+(LaurentQ a, const LaurentQ& b) { return a += b; }
  friend LaurentQ operator-(LaurentQ a, const LaurentQ& b) { return a -= b; }
  friend LaurentQ operator*(const LaurentQ& a, const LaurentQ& b);
  friend LaurentQ operator*(LaurentQ a, const Integer& c) { return a *= c; }
  friend bool operator==(const LaurentQ& a, const LaurentQ& b) {
    return a.low_ == b.low_ && a.c_ == b.c_;
  }
  friend bool operator!=(const LaurentQ& a, const LaurentQ& b) { return !(a == b); }

  // multiply by q^k
  LaurentQ shifted(int k) const;
  // q -> -q^{-1}
  LaurentQ bar() const;
  // q -> q^{-1}
  LaurentQ inverted() const;
  // q -> q^k for k != 0
  LaurentQ substitute_power(int k) const;
  // positive gcd of the coefficients (0 for the zero polynomial)
  Integer content() const;
  // exact division by a nonzero integer
  LaurentQ divided(const Integer& c) const;

  std::size_t hash() const;

 private:
  void trim();
  int low_ = 0;
  std::vector<Integer> c_;
};

// Polynomial gcd over Q[q] of the q-power-stripped parts, returned primitive with
// lowest exponent 0 and positive leading coefficient. gcd(0, 0) = 0.
LaurentQ poly_gcd(const LaurentQ& a, const LaurentQ& b);
// a / b in Z[q, q^-1] when it is exact there, otherwise nullopt.
std::optional<LaurentQ> divide_exact(const LaurentQ& a, const LaurentQ& b);

std::string to_string(const LaurentQ& p);

// Element of Q(q) in canonical form: coprime numerator and denominator over Q[q],
// denominator with lowest exponent 0 and positive leading coefficient, and no
// common integer content.
class RatQ {
 public:
  RatQ() : den_(1) {}
  RatQ(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatQ(LaurentQ num);                 // NOLINT(google-explicit-constructor)
  RatQ(LaurentQ num, LaurentQ den);
  // caller guarantees gcd(num, den) = 1 over Q[q]; only units are normalized
  static RatQ from_coprime(LaurentQ num, LaurentQ den);

  const LaurentQ& num() const { return num_; }
  const LaurentQ& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return den_.is_one() && num_.is_one(); }
  bool is_laurent() const { return den_.is_one(); }

  RatQ& operator+=(const RatQ& o);
  RatQ& operator-=(const RatQ& o);
  RatQ& operator*=(const RatQ& o);
  RatQ& operator/=(const RatQ& o);
  RatQ operator-() const;
  friend RatQ operator+(RatQ a, const RatQ& b) { return a += b; }
  friend RatQ operator-(RatQ a, const RatQ& b) { return a -= b; }
  friend RatQ operator*(RatQ a, const RatQ& b) { return a *= b; }
  friend RatQ operator/(RatQ a, const RatQ& b) { return a /= b; }
  friend bool operator==(const RatQ& a, const RatQ& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatQ& a, const RatQ& b) { return !(a == b); }

  RatQ inverse() const;
  RatQ shifted(int k) const;
  RatQ bar() const;
  RatQ inverted() const;

 private:
  struct Raw {};
  RatQ(LaurentQ num, LaurentQ den, Raw) : num_(std::move(num)), den_(std::move(den)) {}
  // fix q-power, content and sign; gcd already removed
  void finish();
  LaurentQ num_;
  LaurentQ den_;
};

std::string to_string(const RatQ& r);

struct IntegralCheck {
  bool integral = false;
  LaurentQ value;
};
IntegralCheck is_integral_laurent(const RatQ& r);

// Laurent polynomial in x with coefficients in Q(q).
class XPoly {
 public:
  using Terms = std::map<int, RatQ>;

  XPoly() = default;
  XPoly(long c);            // NOLINT(google-explicit-constructor)
  XPoly(const RatQ& c);     // NOLINT(google-explicit-constructor)
  XPoly(const LaurentQ& c); // NOLINT(google-explicit-constructor)
  explicit XPoly(Terms terms);
  static XPoly monomial(const RatQ& c, int x_exponent);
  static XPoly x_power(int k) { return monomial(RatQ(1), k); }

  bool is_zero() const { return t_.empty(); }
  const Terms& terms() const { return t_; }
  RatQ coeff(int x_exponent) const;
  int low() const { return t_.begin()->first; }
  int high() const { return t_.rbegin()->first; }
  bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_.begin()->first == 0); }
  bool is_monomial() const { return t_.size() == 1; }

  XPoly& operator+=(const XPoly& o);
  XPoly& operator-=(const XPoly& o);
  XPoly& operator*=(const XPoly& o);
  XPoly& operator*=(const RatQ& c);
  XPoly operator-() const;
  friend XPoly operator+(XPoly a, const XPoly& b) { return a += b; }
  friend XPoly operator-(XPoly a, const XPoly& b) { return a -= b; }
  friend XPoly operator*(const XPoly& a, const XPoly& b);
  friend XPoly operator*(XPoly a, const RatQ& c) { return a *= c; }
  friend bool operator==(const XPoly& a, const XPoly& b) { return a.t_ == b.t_; }
  friend bool operator!=(const XPoly& a, const XPoly& b) { return !(a == b); }

  // multiply by x^k
  XPoly x_shifted(int k) const;
  // q -> q^{-1} on coefficients
  XPoly q_inverted() const;
  // x -> x^{-1}
  XPoly x_inverted() const;
  // inverse of a nonzero monomial c x^k
  XPoly monomial_inverse() const;

  void add_term(int x_exponent, const RatQ& c);

 private:
  Terms t_;
};

XPoly operator*(const XPoly& a, const XPoly& b);

RatQ subst_x_eq_qn(const XPoly& p, int n);
XPoly subst_q_bar(const XPoly& p);

// a / b in Q(q)[x, x^-1] when exact, otherwise nullopt. b must be nonzero.
std::optional<XPoly> divide_exact(const XPoly& a, const XPoly& b);
// gcd over Q(q)[x, x^-1], normalized to lowest x-exponent 0 and leading coefficient 1.
XPoly poly_gcd(const XPoly& a, const XPoly& b);

// Canonical text: terms by x-exponent descending, e.g. "(q^2 - q^-2)/(q - q^-1) * x^1".
// A constant Laurent polynomial prints bare.
std::string to_string(const XPoly& p);
std::ostream& operator<<(std::ostream& os, const LaurentQ& p);
std::ostream& operator<<(std::ostream& os, const RatQ& r);
std::ostream& operator<<(std::ostream& os, const XPoly& p);

}  // namespace qhomfly
