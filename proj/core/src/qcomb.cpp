#include "qhomfly/qcomb.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <utility>

namespace qhomfly {

namespace {

template <class V>
class Memo {
 public:
  template <class F>
  const V& get(std::pair<int, int> key, F&& make) {
    {
      std::shared_lock lock(mu_);
      auto it = map_.find(key);
      if (it != map_.end()) return it->second;
    }
    V v = make();
    std::unique_lock lock(mu_);
    return map_.emplace(key, std::move(v)).first->second;
  }

 private:
  std::shared_mutex mu_;
  std::map<std::pair<int, int>, V> map_;
};

LaurentQ qint_laurent(int r) {
  if (r == 0) return LaurentQ();
  const int a = r < 0 ? -r : r;
  std::vector<Integer> c(static_cast<std::size_t>(2 * a - 1));
  for (std::size_t i = 0; i < c.size(); i += 2) c[i] = r < 0 ? -1 : 1;
  return LaurentQ::from_dense(1 - a, std::move(c));
}

LaurentQ qfactorial_laurent(int r) {
  LaurentQ p(1);
  for (int k = 2; k <= r; ++k) p *= qint_laurent(k);
  return p;
}

Memo<RatQ>& binom_memo() {
  static Memo<RatQ> memo;
  return memo;
}

Memo<LaurentQ>& binom_laurent_memo() {
  static Memo<LaurentQ> memo;
  return memo;
}

Memo<XPoly>& xbinom_memo() {
  static Memo<XPoly> memo;
  return memo;
}

}  // namespace

RatQ qint(int r) { return RatQ(qint_laurent(r)); }

RatQ qfactorial(int r) {
  if (r < 0) throw std::invalid_argument("qfactorial of a negative integer");
  return RatQ(qfactorial_laurent(r));
}

RatQ qbinom(int r, int s) {
  if (s < 0) return RatQ();
  if (s == 0) return RatQ(1);
  return binom_memo().get({r, s}, [&] {
    LaurentQ num(1);
    for (int k = r - s + 1; k <= r; ++k) num *= qint_laurent(k);
    return RatQ(num, qfactorial_laurent(s));
  });
}

const LaurentQ& qbinom_laurent(int r, int s) {
  return binom_laurent_memo().get({r, s}, [&] {
    RatQ b = qbinom(r, s);
    if (!b.is_laurent()) throw std::logic_error("qbinom is not a Laurent polynomial");
    return b.num();
  });
}

XPoly xbinom(int s, int l) {
  if (l < 0) return XPoly();
  if (l == 0) return XPoly(1);
  return xbinom_memo().get({s, l}, [&] {
    // numerator as x-exponent -> integer Laurent polynomial in q
    std::map<int, LaurentQ> num{{0, LaurentQ(1)}};
    LaurentQ den(1);
    for (int j = 1; j <= l; ++j) {
      std::map<int, LaurentQ> next;
      for (const auto& [k, c] : num) {
        next[k + 1] += c.shifted(s - j + 1);
        next[k - 1] -= c.shifted(-s + j - 1);
      }
      num = std::move(next);
      den *= LaurentQ::q_power(j) - LaurentQ::q_power(-j);
    }
    XPoly out;
    for (const auto& [k, c] : num)
      if (!c.is_zero()) out.add_term(k, RatQ(c, den));
    return out;
  });
}

}  // namespace qhomfly
