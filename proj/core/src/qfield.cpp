#include "qhomfly/qfield.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace qhomfly {

namespace {

using Dense = std::vector<Integer>;

void trim_dense(Dense& d) {
  while (!d.empty() && d.back() == 0) d.pop_back();
}

int degree(const Dense& d) { return static_cast<int>(d.size()) - 1; }

Integer dense_content(const Dense& d) {
  Integer g = 0;
  for (const auto& c : d) {
    if (c == 0) continue;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

void make_primitive(Dense& d) {
  Integer g = dense_content(d);
  if (g == 0) return;
  if (d.back() < 0) g = -g;
  if (g == 1) return;
  for (auto& c : d) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

// pseudo-remainder of a by b (deg a >= deg b >= 0)
Dense prem(Dense a, const Dense& b) {
  const int db = degree(b);
  const Integer& lb = b.back();
  Integer lead;
  while (!a.empty() && degree(a) >= db) {
    lead = a.back();
    const int shift = degree(a) - db;
    for (auto& c : a) c *= lb;
    for (int i = 0; i <= db; ++i)
      mpz_submul(a[i + shift].get_mpz_t(), lead.get_mpz_t(), b[i].get_mpz_t());
    trim_dense(a);
  }
  return a;
}

Dense dense_gcd(Dense a, Dense b) {
  make_primitive(a);
  make_primitive(b);
  if (degree(a) < degree(b)) std::swap(a, b);
  while (!b.empty()) {
    if (degree(b) == 0) return Dense{1};
    Dense r = prem(a, b);
    make_primitive(r);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// exact quotient a / b over Z[q]; nullopt when b does not divide a there
std::optional<Dense> dense_divide(Dense a, const Dense& b) {
  const int db = degree(b);
  if (degree(a) < db) {
    if (a.empty()) return Dense{};
    return std::nullopt;
  }
  Dense quo(degree(a) - db + 1);
  const Integer& lb = b.back();
  Integer lead;
  while (!a.empty() && degree(a) >= db) {
    const int shift = degree(a) - db;
    if (!mpz_divisible_p(a.back().get_mpz_t(), lb.get_mpz_t())) return std::nullopt;
    mpz_divexact(lead.get_mpz_t(), a.back().get_mpz_t(), lb.get_mpz_t());
    quo[shift] = lead;
    for (int i = 0; i <= db; ++i)
      mpz_submul(a[i + shift].get_mpz_t(), lead.get_mpz_t(), b[i].get_mpz_t());
    trim_dense(a);
  }
  if (!a.empty()) return std::nullopt;
  return quo;
}

std::string exp_suffix(const char* var, int e) {
  if (e == 1) return var;
  return std::string(var) + "^" + std::to_string(e);
}

}  // namespace

// ---------------------------------------------------------------- LaurentQ

LaurentQ::LaurentQ(long c) {
  if (c != 0) c_.emplace_back(c);
}

LaurentQ::LaurentQ(const Integer& c) {
  if (c != 0) c_.push_back(c);
}

LaurentQ LaurentQ::monomial(const Integer& c, int exponent) {
  LaurentQ p(c);
  if (!p.is_zero()) p.low_ = exponent;
  return p;
}

LaurentQ LaurentQ::from_dense(int low, std::vector<Integer> coeffs) {
  LaurentQ p;
  p.low_ = low;
  p.c_ = std::move(coeffs);
  p.trim();
  return p;
}

LaurentQ LaurentQ::from_terms(const std::map<int, Integer>& terms) {
  LaurentQ p;
  if (terms.empty()) return p;
  const int lo = terms.begin()->first;
  const int hi = terms.rbegin()->first;
  std::vector<Integer> c(static_cast<std::size_t>(hi - lo + 1));
  for (const auto& [e, v] : terms) c[e - lo] += v;
  return from_dense(lo, std::move(c));
}

void LaurentQ::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
  std::size_t k = 0;
  while (k < c_.size() && c_[k] == 0) ++k;
  if (k > 0) {
    c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(k));
    low_ += static_cast<int>(k);
  }
  if (c_.empty()) low_ = 0;
}

bool LaurentQ::is_one() const { return c_.size() == 1 && low_ == 0 && c_[0] == 1; }

Integer LaurentQ::coeff(int exponent) const {
  if (c_.empty() || exponent < low_ || exponent > high()) return 0;
  return c_[exponent - low_];
}

std::map<int, Integer> LaurentQ::terms() const {
  std::map<int, Integer> out;
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) out.emplace(low_ + static_cast<int>(i), c_[i]);
  return out;
}

LaurentQ& LaurentQ::operator+=(const LaurentQ& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  const int lo = std::min(low_, o.low_);
  const int hi = std::max(high(), o.high());
  if (lo < low_) {
    c_.insert(c_.begin(), static_cast<std::size_t>(low_ - lo), Integer(0));
    low_ = lo;
  }
  c_.resize(static_cast<std::size_t>(hi - lo + 1));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[o.low_ - low_ + i] += o.c_[i];
  trim();
  return *this;
}

LaurentQ& LaurentQ::operator-=(const LaurentQ& o) {
  if (o.is_zero()) return *this;
  return *this += -o;
}

LaurentQ operator*(const LaurentQ& a, const LaurentQ& b) {
  LaurentQ r;
  if (a.is_zero() || b.is_zero()) return r;
  r.low_ = a.low_ + b.low_;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      mpz_addmul(r.c_[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
  }
  r.trim();
  return r;
}

LaurentQ& LaurentQ::operator*=(const LaurentQ& o) { return *this = *this * o; }

LaurentQ& LaurentQ::operator*=(const Integer& c) {
  if (c == 0) {
    c_.clear();
    low_ = 0;
    return *this;
  }
  for (auto& v : c_) v *= c;
  return *this;
}

LaurentQ LaurentQ::operator-() const {
  LaurentQ r = *this;
  for (auto& v : r.c_) v = -v;
  return r;
}

LaurentQ LaurentQ::shifted(int k) const {
  LaurentQ r = *this;
  if (!r.is_zero()) r.low_ += k;
  return r;
}

LaurentQ LaurentQ::bar() const {
  LaurentQ r;
  if (is_zero()) return r;
  r.low_ = -high();
  r.c_.assign(c_.rbegin(), c_.rend());
  // coefficient of q^e picks up (-1)^e
  for (std::size_t i = 0; i < r.c_.size(); ++i) {
    const int e = r.low_ + static_cast<int>(i);
    if (e % 2 != 0) r.c_[i] = -r.c_[i];
  }
  return r;
}

LaurentQ LaurentQ::inverted() const {
  LaurentQ r;
  if (is_zero()) return r;
  r.low_ = -high();
  r.c_.assign(c_.rbegin(), c_.rend());
  return r;
}

LaurentQ LaurentQ::substitute_power(int k) const {
  if (k == 1) return *this;
  if (k == -1) return inverted();
  if (k == 0) throw std::invalid_argument("substitute_power: exponent 0");
  std::map<int, Integer> t;
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) t[(low_ + static_cast<int>(i)) * k] += c_[i];
  return from_terms(t);
}

Integer LaurentQ::content() const { return dense_content(c_); }

LaurentQ LaurentQ::divided(const Integer& c) const {
  LaurentQ r = *this;
  for (auto& v : r.c_) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), c.get_mpz_t());
  return r;
}

std::size_t LaurentQ::hash() const {
  std::size_t h = std::hash<int>()(low_);
  for (const auto& v : c_) {
    const std::size_t limb = mpz_size(v.get_mpz_t()) ? mpz_getlimbn(v.get_mpz_t(), 0) : 0;
    h ^= (limb + static_cast<std::size_t>(mpz_sgn(v.get_mpz_t())) + 0x9e3779b97f4a7c15ULL +
          (h << 6) + (h >> 2));
  }
  return h;
}

LaurentQ poly_gcd(const LaurentQ& a, const LaurentQ& b) {
  if (a.is_zero() && b.is_zero()) return LaurentQ();
  Dense da = a.dense();
  Dense db = b.dense();
  if (a.is_zero() || b.is_zero()) {
    Dense d = a.is_zero() ? db : da;
    make_primitive(d);
    return LaurentQ::from_dense(0, std::move(d));
  }
  if (da.size() == 1 || db.size() == 1) return LaurentQ(1);
  return LaurentQ::from_dense(0, dense_gcd(std::move(da), std::move(db)));
}

std::optional<LaurentQ> divide_exact(const LaurentQ& a, const LaurentQ& b) {
  if (b.is_zero()) throw std::domain_error("division by zero Laurent polynomial");
  if (a.is_zero()) return LaurentQ();
  if (b.is_monomial()) {
    if (!mpz_divisible_p(a.content().get_mpz_t(), b.leading().get_mpz_t())) return std::nullopt;
    return a.divided(b.leading()).shifted(-b.low());
  }
  auto q = dense_divide(a.dense(), b.dense());
  if (!q) return std::nullopt;
  return LaurentQ::from_dense(a.low() - b.low(), std::move(*q));
}

std::string to_string(const LaurentQ& p) {
  if (p.is_zero()) return "0";
  std::string s;
  bool first = true;
  const auto& c = p.dense();
  for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) {
    if (c[i] == 0) continue;
    const int e = p.low() + i;
    Integer v = c[i];
    if (first) {
      if (v < 0) {
        s += "-";
        v = -v;
      }
    } else {
      s += v < 0 ? " - " : " + ";
      if (v < 0) v = -v;
    }
    first = false;
    if (e == 0) {
      s += v.get_str();
    } else {
      if (v != 1) s += v.get_str() + "*";
      s += exp_suffix("q", e);
    }
  }
  return s;
}

// ---------------------------------------------------------------- RatQ

RatQ::RatQ(LaurentQ num) : num_(std::move(num)), den_(1) {}

RatQ::RatQ(LaurentQ num, LaurentQ den) {
  if (den.is_zero()) throw std::domain_error("RatQ with zero denominator");
  if (num.is_zero()) {
    den_ = LaurentQ(1);
    return;
  }
  if (den.is_monomial()) {
    num_ = std::move(num);
    den_ = std::move(den);
    finish();
    return;
  }
  LaurentQ g = poly_gcd(num, den);
  if (!g.is_one()) {
    num = *divide_exact(num, g);
    den = *divide_exact(den, g);
  }
  num_ = std::move(num);
  den_ = std::move(den);
  finish();
}

RatQ RatQ::from_coprime(LaurentQ num, LaurentQ den) {
  if (den.is_zero()) throw std::domain_error("RatQ with zero denominator");
  RatQ r(std::move(num), std::move(den), Raw{});
  r.finish();
  return r;
}

void RatQ::finish() {
  if (num_.is_zero()) {
    den_ = LaurentQ(1);
    return;
  }
  const int k = den_.low();
  if (k != 0) {
    num_ = num_.shifted(-k);
    den_ = den_.shifted(-k);
  }
  Integer g = gcd(num_.content(), den_.content());
  if (den_.leading() < 0) g = -g;
  if (g != 1) {
    num_ = num_.divided(g);
    den_ = den_.divided(g);
  }
}

RatQ& RatQ::operator+=(const RatQ& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_.is_one() && o.den_.is_one()) {
    num_ += o.num_;
    return *this;
  }
  if (den_ == o.den_) return *this = RatQ(num_ + o.num_, den_);
  if (o.den_.is_one()) return *this = RatQ(num_ + o.num_ * den_, den_);
  if (den_.is_one()) return *this = RatQ(num_ * o.den_ + o.num_, o.den_);
  LaurentQ g = poly_gcd(den_, o.den_);
  LaurentQ b1 = *divide_exact(den_, g);
  LaurentQ d1 = *divide_exact(o.den_, g);
  return *this = RatQ(num_ * d1 + o.num_ * b1, b1 * o.den_);
}

RatQ& RatQ::operator-=(const RatQ& o) { return *this += -o; }

RatQ& RatQ::operator*=(const RatQ& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = RatQ();
  if (den_.is_one() && o.den_.is_one()) {
    num_ *= o.num_;
    return *this;
  }
  LaurentQ g1 = poly_gcd(num_, o.den_);
  LaurentQ g2 = poly_gcd(o.num_, den_);
  LaurentQ n1 = g1.is_one() ? num_ : *divide_exact(num_, g1);
  LaurentQ n2 = g2.is_one() ? o.num_ : *divide_exact(o.num_, g2);
  LaurentQ d1 = g2.is_one() ? den_ : *divide_exact(den_, g2);
  LaurentQ d2 = g1.is_one() ? o.den_ : *divide_exact(o.den_, g1);
  *this = RatQ(n1 * n2, d1 * d2, Raw{});
  finish();
  return *this;
}

RatQ& RatQ::operator/=(const RatQ& o) { return *this *= o.inverse(); }

RatQ RatQ::operator-() const { return RatQ(-num_, den_, Raw{}); }

RatQ RatQ::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  RatQ r(den_, num_, Raw{});
  r.finish();
  return r;
}

RatQ RatQ::shifted(int k) const { return RatQ(num_.shifted(k), den_, Raw{}); }

RatQ RatQ::bar() const {
  RatQ r(num_.bar(), den_.bar(), Raw{});
  r.finish();
  return r;
}

RatQ RatQ::inverted() const {
  RatQ r(num_.inverted(), den_.inverted(), Raw{});
  r.finish();
  return r;
}

std::string to_string(const RatQ& r) {
  if (r.den().is_one()) return to_string(r.num());
  return "(" + to_string(r.num()) + ")/(" + to_string(r.den()) + ")";
}

IntegralCheck is_integral_laurent(const RatQ& r) {
  if (r.den().is_one()) return {true, r.num()};
  return {false, LaurentQ()};
}

// ---------------------------------------------------------------- XPoly

XPoly::XPoly(long c) {
  if (c != 0) t_.emplace(0, RatQ(c));
}

XPoly::XPoly(const RatQ& c) {
  if (!c.is_zero()) t_.emplace(0, c);
}

XPoly::XPoly(const LaurentQ& c) {
  if (!c.is_zero()) t_.emplace(0, RatQ(c));
}

XPoly::XPoly(Terms terms) : t_(std::move(terms)) {
  for (auto it = t_.begin(); it != t_.end();)
    it = it->second.is_zero() ? t_.erase(it) : std::next(it);
}

XPoly XPoly::monomial(const RatQ& c, int x_exponent) {
  XPoly p;
  p.add_term(x_exponent, c);
  return p;
}

RatQ XPoly::coeff(int x_exponent) const {
  auto it = t_.find(x_exponent);
  return it == t_.end() ? RatQ() : it->second;
}

void XPoly::add_term(int x_exponent, const RatQ& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = t_.emplace(x_exponent, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) t_.erase(it);
}

XPoly& XPoly::operator+=(const XPoly& o) {
  for (const auto& [k, c] : o.t_) add_term(k, c);
  return *this;
}

XPoly& XPoly::operator-=(const XPoly& o) {
  for (const auto& [k, c] : o.t_) add_term(k, -c);
  return *this;
}

XPoly operator*(const XPoly& a, const XPoly& b) {
  XPoly r;
  for (const auto& [i, ci] : a.t_)
    for (const auto& [j, cj] : b.t_) r.add_term(i + j, ci * cj);
  return r;
}

XPoly& XPoly::operator*=(const XPoly& o) { return *this = *this * o; }

XPoly& XPoly::operator*=(const RatQ& c) {
  if (c.is_zero()) {
    t_.clear();
    return *this;
  }
  for (auto& [k, v] : t_) v *= c;
  return *this;
}

XPoly XPoly::operator-() const {
  XPoly r = *this;
  for (auto& [k, v] : r.t_) v = -v;
  return r;
}

XPoly XPoly::x_shifted(int k) const {
  XPoly r;
  for (const auto& [e, c] : t_) r.t_.emplace_hint(r.t_.end(), e + k, c);
  return r;
}

XPoly XPoly::q_inverted() const {
  XPoly r;
  for (const auto& [e, c] : t_) r.t_.emplace_hint(r.t_.end(), e, c.inverted());
  return r;
}

XPoly XPoly::x_inverted() const {
  XPoly r;
  for (const auto& [e, c] : t_) r.t_.emplace(-e, c);
  return r;
}

XPoly XPoly::monomial_inverse() const {
  if (!is_monomial()) throw std::domain_error("XPoly is not an invertible monomial");
  return monomial(t_.begin()->second.inverse(), -t_.begin()->first);
}

RatQ subst_x_eq_qn(const XPoly& p, int n) {
  if (p.is_zero()) return RatQ();
  // sum over the lcm of the denominators to avoid repeated gcds
  LaurentQ l(1);
  for (const auto& [k, c] : p.terms()) {
    if (c.den().is_one() || c.den() == l) continue;
    LaurentQ g = poly_gcd(l, c.den());
    l = *divide_exact(l, g) * c.den();
  }
  LaurentQ num;
  for (const auto& [k, c] : p.terms()) {
    LaurentQ part = c.den() == l ? c.num() : c.num() * *divide_exact(l, c.den());
    num += part.shifted(n * k);
  }
  return RatQ(num, l);
}

XPoly subst_q_bar(const XPoly& p) {
  XPoly::Terms t;
  for (const auto& [k, c] : p.terms()) t.emplace_hint(t.end(), k, c.bar());
  return XPoly(std::move(t));
}

namespace {

// dense polynomial in x over Q(q), index = exponent
using XDense = std::vector<RatQ>;

XDense to_xdense(const XPoly& p, int& shift) {
  shift = p.low();
  XDense d(static_cast<std::size_t>(p.high() - p.low() + 1));
  for (const auto& [k, c] : p.terms()) d[k - shift] = c;
  return d;
}

void trim_x(XDense& d) {
  while (!d.empty() && d.back().is_zero()) d.pop_back();
}

XPoly from_xdense(const XDense& d, int shift) {
  XPoly p;
  for (std::size_t i = 0; i < d.size(); ++i) p.add_term(shift + static_cast<int>(i), d[i]);
  return p;
}

// divides a by b in place, returning the quotient; a becomes the remainder
XDense xdivmod(XDense& a, const XDense& b) {
  const int db = static_cast<int>(b.size()) - 1;
  XDense quo;
  if (static_cast<int>(a.size()) - 1 < db) return quo;
  quo.assign(a.size() - b.size() + 1, RatQ());
  const RatQ inv = b.back().inverse();
  while (!a.empty() && static_cast<int>(a.size()) - 1 >= db) {
    const int shift = static_cast<int>(a.size()) - 1 - db;
    RatQ lead = a.back() * inv;
    quo[shift] = lead;
    for (int i = 0; i <= db; ++i) {
      if (b[i].is_zero()) continue;
      a[i + shift] -= lead * b[i];
    }
    trim_x(a);
  }
  return quo;
}

}  // namespace

std::optional<XPoly> divide_exact(const XPoly& a, const XPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by zero XPoly");
  if (a.is_zero()) return XPoly();
  if (b.is_monomial()) return a * b.monomial_inverse();
  int sa = 0;
  int sb = 0;
  XDense da = to_xdense(a, sa);
  XDense db = to_xdense(b, sb);
  XDense quo = xdivmod(da, db);
  if (!da.empty()) return std::nullopt;
  return from_xdense(quo, sa - sb);
}

XPoly poly_gcd(const XPoly& a, const XPoly& b) {
  if (a.is_zero() && b.is_zero()) return XPoly();
  int s = 0;
  XDense x = a.is_zero() ? XDense{} : to_xdense(a, s);
  XDense y = b.is_zero() ? XDense{} : to_xdense(b, s);
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.empty()) {
    xdivmod(x, y);
    std::swap(x, y);
  }
  const RatQ inv = x.back().inverse();
  for (auto& c : x) c *= inv;
  return from_xdense(x, 0);
}

std::string to_string(const XPoly& p) {
  if (p.is_zero()) return "0";
  if (p.is_constant() && p.coeff(0).is_laurent()) return to_string(p.coeff(0).num());
  std::string s;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    if (!s.empty()) s += " + ";
    const RatQ& c = it->second;
    s += "(" + to_string(c.num()) + ")";
    if (!c.den().is_one()) s += "/(" + to_string(c.den()) + ")";
    if (it->first != 0) s += " * x^" + std::to_string(it->first);
  }
  return s;
}

std::ostream& operator<<(std::ostream& os, const LaurentQ& p) { return os << to_string(p); }
std::ostream& operator<<(std::ostream& os, const RatQ& r) { return os << to_string(r); }
std::ostream& operator<<(std::ostream& os, const XPoly& p) { return os << to_string(p); }

}  // namespace qhomfly
