#include "qhomfly/ladder.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace qhomfly {

LadderWord concat(const LadderWord& a, const LadderWord& b) {
  LadderWord w{a.sides, a.letters};
  w.letters.insert(w.letters.end(), b.letters.begin(), b.letters.end());
  return w;
}

std::string to_string(const Letter& l) {
  return std::string(l.kind == LetterKind::E ? "E" : "F") + std::to_string(l.index) + "^(" +
         std::to_string(l.power) + ")";
}

std::string to_string(const LadderWord& w) {
  std::string s;
  for (const auto& l : w.letters) {
    if (!s.empty()) s += ' ';
    s += to_string(l);
  }
  return s;
}

void WeightOffset::apply(const Letter& l) {
  const int sgn = l.kind == LetterKind::E ? 1 : -1;
  d_.at(l.index - 1) += sgn * l.power;
  d_.at(l.index) -= sgn * l.power;
}

bool WeightOffset::is_zero() const {
  return std::all_of(d_.begin(), d_.end(), [](int v) { return v == 0; });
}

WeightOffset word_weight(const LadderWord& w) {
  WeightOffset d(w.sides);
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) d.apply(*it);
  return d;
}

LadderWord build_cup(std::span<const int> b, int m) {
  if (static_cast<int>(b.size()) != m) throw std::invalid_argument("build_cup: need m colors");
  LadderWord w{2 * m, {}};
  for (int k = 1; k <= m; ++k) {
    const int p = b[k - 1];
    for (int i = k - 1; i >= 1; --i) {
      w.letters.push_back(F(m + i, p));
      w.letters.push_back(F(m - i, p));
    }
    w.letters.push_back(F(m, p));
  }
  return w;
}

LadderWord build_cap(std::span<const int> b, int m) {
  if (static_cast<int>(b.size()) != m) throw std::invalid_argument("build_cap: need m colors");
  LadderWord w{2 * m, {}};
  for (int k = m; k >= 1; --k) {
    const int p = b[k - 1];
    w.letters.push_back(E(m, p));
    for (int i = 1; i <= k - 1; ++i) {
      w.letters.push_back(E(m + i, p));
      w.letters.push_back(E(m - i, p));
    }
  }
  return w;
}

std::vector<CrossingSite> crossing_weights(const ColoredBraid& cb) {
  const int m = cb.braid.strands;
  std::vector<int> cur = cb.strand_colors();
  std::vector<CrossingSite> sites(cb.braid.word.size());
  for (std::size_t j = cb.braid.word.size(); j-- > 0;) {
    const int g = cb.braid.word[j];
    const int i = std::abs(g);
    sites[j] = CrossingSite{m + i, cur[i - 1], cur[i], g > 0 ? 1 : -1};
    std::swap(cur[i - 1], cur[i]);
  }
  return sites;
}

TermEnumerator::TermEnumerator(const ColoredBraid& cb, int extra) : m_(cb.braid.strands) {
  const std::vector<int> b = cb.strand_colors();
  cap_ = build_cap(b, m_);
  cup_ = build_cup(b, m_);
  sites_ = crossing_weights(cb);
  const int amax = b.empty() ? 0 : *std::max_element(b.begin(), b.end());
  for (const auto& site : sites_) {
    lo_.push_back(std::max(0, site.left - site.right));
    hi_.push_back(amax + extra);
  }
  s_ = lo_;
  for (std::size_t j = 0; j < lo_.size(); ++j)
    if (lo_[j] > hi_[j]) done_ = true;
}

std::size_t TermEnumerator::count() const {
  std::size_t n = 1;
  for (std::size_t j = 0; j < lo_.size(); ++j) {
    if (hi_[j] < lo_[j]) return 0;
    n *= static_cast<std::size_t>(hi_[j] - lo_[j] + 1);
  }
  return n;
}

bool TermEnumerator::next(Term& out) {
  if (done_) return false;
  out.word = cap_;
  out.s = s_;
  out.sign = 1;
  out.q_power = 0;
  for (std::size_t j = 0; j < sites_.size(); ++j) {
    const auto& site = sites_[j];
    const int s = s_[j];
    out.word.letters.push_back(E(site.ladder_index, s + site.right - site.left));
    out.word.letters.push_back(F(site.ladder_index, s));
    // (-1)^{a_i + a_i a_{i+1}} q^{eps a_i} (-q)^{-eps s}
    const int parity = site.left + site.left * site.right + s;
    if (parity % 2 != 0) out.sign = -out.sign;
    out.q_power += site.sign * (site.left - s);
  }
  out.word.letters.insert(out.word.letters.end(), cup_.letters.begin(), cup_.letters.end());
  // advance, last coordinate fastest
  std::size_t j = s_.size();
  while (j > 0) {
    --j;
    if (s_[j] < hi_[j]) {
      ++s_[j];
      break;
    }
    s_[j] = lo_[j];
    if (j == 0) done_ = true;
  }
  if (s_.empty()) done_ = true;
  return true;
}

std::vector<Term> enumerate_terms(const ColoredBraid& cb, int extra) {
  std::vector<Term> out;
  TermEnumerator e(cb, extra);
  Term t;
  while (e.next(t)) out.push_back(t);
  return out;
}

std::string dump_term(const Term& t) {
  return to_string(t.word) + " @ " + to_string(LaurentQ::monomial(t.sign, t.q_power));
}

}  // namespace qhomfly
