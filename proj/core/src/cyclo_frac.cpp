#include "cyclo_frac.hpp"

#include <algorithm>
#include <deque>
#include <mutex>

namespace qhomfly::detail {

const LaurentQ& cyclotomic(int d) {
  static std::mutex mu;
  static std::deque<LaurentQ> table{LaurentQ()};  // index 0 unused
  std::lock_guard lock(mu);
  while (static_cast<int>(table.size()) <= d) {
    const int k = static_cast<int>(table.size());
    LaurentQ p = LaurentQ::q_power(k) - LaurentQ(1);
    for (int e = 1; e < k; ++e)
      if (k % e == 0) p = *divide_exact(p, table[e]);
    table.push_back(std::move(p));
  }
  return table[d];
}

namespace {

LaurentQ den_product(const std::vector<int>& exps) {
  LaurentQ p(1);
  for (std::size_t d = 1; d < exps.size(); ++d)
    for (int k = 0; k < exps[d]; ++k) p *= cyclotomic(static_cast<int>(d));
  return p;
}

LaurentQ lift_factor(const std::vector<int>& from, const std::vector<int>& to) {
  LaurentQ p(1);
  for (std::size_t d = 1; d < to.size(); ++d) {
    const int have = d < from.size() ? from[d] : 0;
    for (int k = have; k < to[d]; ++k) p *= cyclotomic(static_cast<int>(d));
  }
  return p;
}

}  // namespace

CycloFrac::CycloFrac(const LaurentQ& c) {
  if (!c.is_zero()) num_.push_back(c);
}

CycloFrac CycloFrac::xbinom(int s, int l) {
  CycloFrac r(LaurentQ(1));
  if (l < 0) return CycloFrac();
  for (int j = 1; j <= l; ++j) {
    // (x q^{s-j+1} - x^-1 q^{-s+j-1}) q^j / (q^{2j} - 1)
    std::vector<LaurentQ> next(r.num_.size() + 2);
    for (std::size_t k = 0; k < r.num_.size(); ++k) {
      next[k + 2] += r.num_[k].shifted(s + 1);
      next[k] -= r.num_[k].shifted(-s + 2 * j - 1);
    }
    r.num_ = std::move(next);
    r.xlow_ -= 1;
    const int top = 2 * j;
    if (static_cast<int>(r.den_.size()) <= top) r.den_.resize(static_cast<std::size_t>(top) + 1, 0);
    for (int d = 1; d <= top; ++d)
      if (top % d == 0) ++r.den_[d];
  }
  r.trim();
  return r;
}

void CycloFrac::trim() {
  while (!num_.empty() && num_.back().is_zero()) num_.pop_back();
  std::size_t k = 0;
  while (k < num_.size() && num_[k].is_zero()) ++k;
  if (k > 0) {
    num_.erase(num_.begin(), num_.begin() + static_cast<std::ptrdiff_t>(k));
    xlow_ += static_cast<int>(k);
  }
  if (num_.empty()) {
    xlow_ = 0;
    den_.clear();
  }
  while (!den_.empty() && den_.back() == 0) den_.pop_back();
}

void CycloFrac::mul_laurent(const LaurentQ& c) {
  if (c.is_one()) return;
  for (auto& v : num_) v *= c;
  trim();
}

CycloFrac operator*(const CycloFrac& a, const CycloFrac& b) {
  CycloFrac r;
  if (a.is_zero() || b.is_zero()) return r;
  if (b.num_.size() == 1 && b.den_.empty()) {
    r = a;
    r.xlow_ += b.xlow_;
    r.mul_laurent(b.num_[0]);
    return r;
  }
  if (a.num_.size() == 1 && a.den_.empty()) {
    r = b;
    r.xlow_ += a.xlow_;
    r.mul_laurent(a.num_[0]);
    return r;
  }
  r.xlow_ = a.xlow_ + b.xlow_;
  r.num_.assign(a.num_.size() + b.num_.size() - 1, LaurentQ());
  for (std::size_t i = 0; i < a.num_.size(); ++i) {
    if (a.num_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.num_.size(); ++j)
      if (!b.num_[j].is_zero()) r.num_[i + j] += a.num_[i] * b.num_[j];
  }
  r.den_.assign(std::max(a.den_.size(), b.den_.size()), 0);
  for (std::size_t d = 0; d < a.den_.size(); ++d) r.den_[d] += a.den_[d];
  for (std::size_t d = 0; d < b.den_.size(); ++d) r.den_[d] += b.den_[d];
  r.trim();
  return r;
}

void CycloFrac::add(const CycloFrac& o) {
  if (o.is_zero()) return;
  if (is_zero()) {
    *this = o;
    return;
  }
  const LaurentQ* fb = nullptr;
  LaurentQ fb_store;
  if (den_ != o.den_) {
    std::vector<int> target(std::max(den_.size(), o.den_.size()), 0);
    for (std::size_t d = 0; d < target.size(); ++d)
      target[d] = std::max(d < den_.size() ? den_[d] : 0, d < o.den_.size() ? o.den_[d] : 0);
    const LaurentQ fa = lift_factor(den_, target);
    fb_store = lift_factor(o.den_, target);
    if (!fb_store.is_one()) fb = &fb_store;
    if (!fa.is_one())
      for (auto& v : num_) v *= fa;
    den_ = std::move(target);
  }
  const int lo = std::min(xlow_, o.xlow_);
  const int hi = std::max(xlow_ + static_cast<int>(num_.size()), o.xlow_ + static_cast<int>(o.num_.size()));
  if (lo < xlow_) {
    num_.insert(num_.begin(), static_cast<std::size_t>(xlow_ - lo), LaurentQ());
    xlow_ = lo;
  }
  num_.resize(static_cast<std::size_t>(hi - lo));
  for (std::size_t k = 0; k < o.num_.size(); ++k) {
    auto& dst = num_[o.xlow_ - xlow_ + k];
    if (fb) dst += o.num_[k] * *fb;
    else dst += o.num_[k];
  }
  trim();
}

XPoly CycloFrac::to_xpoly() const {
  XPoly out;
  for (std::size_t k = 0; k < num_.size(); ++k) {
    if (num_[k].is_zero()) continue;
    LaurentQ n = num_[k];
    std::vector<int> e = den_;
    // the Phi_d are irreducible, so trial division leaves a coprime pair
    for (std::size_t d = 1; d < e.size(); ++d) {
      while (e[d] > 0) {
        auto q = divide_exact(n, cyclotomic(static_cast<int>(d)));
        if (!q) break;
        n = std::move(*q);
        --e[d];
      }
    }
    out.add_term(xlow_ + static_cast<int>(k), RatQ::from_coprime(std::move(n), den_product(e)));
  }
  return out;
}

RatQ CycloFrac::subst_x_eq_qn(int n) const {
  LaurentQ s;
  for (std::size_t k = 0; k < num_.size(); ++k) s += num_[k].shifted(n * (xlow_ + static_cast<int>(k)));
  return RatQ(s, den_product(den_));
}

}  // namespace qhomfly::detail
