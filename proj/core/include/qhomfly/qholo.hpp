#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qhomfly/expression.hpp"
#include "qhomfly/qfield.hpp"

namespace qhomfly {

// P = sum_j c_j(q, x, M) L^j acting by (Pf)(m) = sum_j c_j(q, x, q^m) f(m + j).
class RecOperator {
 public:
  // M-exponent -> coefficient
  using Poly = std::map<int, XPoly>;

  RecOperator() = default;
  explicit RecOperator(std::vector<Poly> coeffs);
  static RecOperator from_terms(const OreTerms& t);
  static RecOperator shift();       // L
  static RecOperator multiplier();  // M
  static RecOperator scalar(const XPoly& c);

  bool is_zero() const { return c_.empty(); }
  int order() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Poly>& coeffs() const { return c_; }
  // c_j(q, x, q^m)
  XPoly coefficient_at(int j, int m) const;
  OreTerms terms() const;

  friend RecOperator operator*(const RecOperator& a, const RecOperator& b);
  friend RecOperator operator+(const RecOperator& a, const RecOperator& b);
  friend RecOperator operator-(const RecOperator& a, const RecOperator& b);
  friend bool operator==(const RecOperator& a, const RecOperator& b) { return a.c_ == b.c_; }

 private:
  void trim();
  std::vector<Poly> c_;
};

// f(start), f(start + 1), ...
struct Sequence {
  int start = 0;
  std::vector<XPoly> values;

  int end() const { return start + static_cast<int>(values.size()); }  // exclusive
  const XPoly& at(int m) const;
};

XPoly apply(const RecOperator& p, const Sequence& f, int m);
// apply(p, f, m) == 0 for every m in [m_lo, m_hi]
bool verify(const RecOperator& p, const Sequence& f, int m_lo, int m_hi);
// indices m for which apply is defined
int last_verifiable(const RecOperator& p, const Sequence& f);

class WindowTooSmall : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Smallest order, then smallest M-degree, with a nonzero solution; nullopt if none within bounds.
std::optional<RecOperator> guess(const Sequence& f, int max_order, int max_M_degree);

// "(<XPoly>)*M^k*L^j + ..."
std::string to_string(const RecOperator& p);
RecOperator parse_operator(std::string_view text);

}  // namespace qhomfly
