#pragma once

#include <vector>

#include "qhomfly/qfield.hpp"

namespace qhomfly::detail {

// d-th cyclotomic polynomial in q
const LaurentQ& cyclotomic(int d);

// Laurent polynomial in x and q over Z divided by a product of cyclotomic
// polynomials in q. Sums use the lcm of the two denominators.
class CycloFrac {
 public:
  CycloFrac() = default;
  explicit CycloFrac(const LaurentQ& c);
  static CycloFrac xbinom(int s, int l);

  bool is_zero() const { return num_.empty(); }
  void mul_laurent(const LaurentQ& c);
  void add(const CycloFrac& o);
  friend CycloFrac operator*(const CycloFrac& a, const CycloFrac& b);
  XPoly to_xpoly() const;
  RatQ subst_x_eq_qn(int n) const;

 private:
  void trim();
  int xlow_ = 0;
  std::vector<LaurentQ> num_;
  std::vector<int> den_;  // den_[d] = exponent of Phi_d
};

}  // namespace qhomfly::detail
