#include "naive_ev.hpp"

#include <algorithm>
#include <optional>

#include "qhomfly/qcomb.hpp"

namespace qhomfly::testing {

namespace {

bool tail_negative(const LadderWord& w) {
  const int m = w.sides / 2;
  WeightOffset d(w.sides);
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    d.apply(*it);
    for (int j = m + 1; j <= w.sides; ++j)
      if (d[j] < 0) return true;
  }
  return false;
}

// weight offsets of letters [from, end)
WeightOffset suffix_weight(const LadderWord& w, std::size_t from) {
  WeightOffset d(w.sides);
  for (std::size_t k = w.letters.size(); k-- > from;) d.apply(w.letters[k]);
  return d;
}

template <class V, class Binom>
V eval(const LadderWord& w, const Binom& binom) {
  for (const auto& l : w.letters)
    if (l.power < 0) return V();
  if (tail_negative(w)) return V();
  std::optional<std::size_t> l;
  for (std::size_t k = w.letters.size(); k-- > 0;)
    if (w.letters[k].kind == LetterKind::E) {
      l = k;
      break;
    }
  if (!l) {
    const bool trivial = std::all_of(w.letters.begin(), w.letters.end(), [](const Letter& x) { return x.power == 0; });
    return trivial ? V(1) : V();
  }
  const std::size_t k = *l;
  if (k + 1 == w.letters.size()) {
    if (w.letters[k].power != 0) return V();
    LadderWord shorter = w;
    shorter.letters.pop_back();
    return eval<V>(shorter, binom);
  }
  const Letter e = w.letters[k];
  const Letter f = w.letters[k + 1];
  if (f.index != e.index) {
    LadderWord sw = w;
    std::swap(sw.letters[k], sw.letters[k + 1]);
    return eval<V>(sw, binom);
  }
  const int r = e.power;
  const int s = f.power;
  const WeightOffset mu = suffix_weight(w, k + 2);
  const int lin = mu.pairing(e.index) + r - s;
  V out;
  for (int t = 0; t <= std::min(r, s); ++t) {
    LadderWord sw = w;
    sw.letters[k] = F(e.index, s - t);
    sw.letters[k + 1] = E(e.index, r - t);
    const V sub = eval<V>(sw, binom);
    if (sub == V()) continue;
    out += binom(e.index, lin, t) * sub;
  }
  return out;
}

}  // namespace

XPoly naive_ev(const LadderWord& w) {
  const int m = w.sides / 2;
  return eval<XPoly>(w, [m](int i, int lin, int t) {
    return i == m ? xbinom(lin, t) : XPoly(qbinom(lin, t));
  });
}

RatQ naive_ev_specialized(const LadderWord& w, int n) {
  const int m = w.sides / 2;
  return eval<RatQ>(w, [m, n](int i, int lin, int t) { return qbinom(lin + (i == m ? n : 0), t); });
}

}  // namespace qhomfly::testing
