#include "qhomfly/pbw.hpp"

#include <cstdint>
#include <cstdlib>
#include <deque>
#include <map>
#include <ostream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cyclo_frac.hpp"
#include "qhomfly/qcomb.hpp"

namespace qhomfly {

namespace {

// F-only word, one code unit per letter: index << 16 | power
using FWord = std::u32string;

constexpr char32_t pack(int index, int power) {
  return static_cast<char32_t>((static_cast<std::uint32_t>(index) << 16) |
                               static_cast<std::uint32_t>(power));
}
constexpr int letter_index(char32_t c) { return static_cast<int>(c >> 16); }
constexpr int letter_power(char32_t c) { return static_cast<int>(c & 0xFFFFu); }

std::string render(const FWord& w) {
  if (w.empty()) return "1";
  std::string s;
  for (char32_t c : w) {
    if (!s.empty()) s += ' ';
    s += "F" + std::to_string(letter_index(c)) + "^(" + std::to_string(letter_power(c)) + ")";
  }
  return s;
}

struct GenericPolicy {
  using Coeff = detail::CycloFrac;
  static Coeff one() { return Coeff(LaurentQ(1)); }
  static Coeff from_laurent(const LaurentQ& c) { return Coeff(c); }
  static bool is_zero(const Coeff& c) { return c.is_zero(); }
  static void add(Coeff& acc, const Coeff& c) { acc.add(c); }
  static Coeff mul(const Coeff& a, const Coeff& b) { return a * b; }
  static void mul_laurent(Coeff& a, const LaurentQ& c) { a.mul_laurent(c); }
  Coeff binom(int lin, int t, bool with_n) const {
    return with_n ? Coeff::xbinom(lin, t) : Coeff(qbinom_laurent(lin, t));
  }
};

struct SpecialPolicy {
  using Coeff = LaurentQ;
  int n = 2;
  static Coeff one() { return LaurentQ(1); }
  static Coeff from_laurent(const LaurentQ& c) { return c; }
  static bool is_zero(const Coeff& c) { return c.is_zero(); }
  static void add(Coeff& acc, const Coeff& c) { acc += c; }
  static Coeff mul(const Coeff& a, const Coeff& b) { return a * b; }
  static void mul_laurent(Coeff& a, const LaurentQ& c) {
    if (!c.is_one()) a *= c;
  }
  Coeff binom(int lin, int t, bool with_n) const {
    return qbinom_laurent(with_n ? lin + n : lin, t);
  }
};

template <class Policy>
class Engine {
 public:
  using Coeff = typename Policy::Coeff;
  using Comb = std::vector<std::pair<FWord, Coeff>>;
  using Acc = std::unordered_map<FWord, Coeff>;

  Engine(int m, Policy policy, EvalOptions opt) : m_(m), policy_(policy), opt_(opt) {
    if (m < 1 || 2 * m > 64) throw EvalError("unsupported strand count");
  }

  Coeff ev(const LadderWord& w) {
    validate(w);
    scratch_.clear();
    for (const auto& l : w.letters)
      if (l.power < 0) return Coeff();
    if (!word_weight(w).is_zero()) return Coeff();
    if (word_tail_negative(w)) return Coeff();
    depth_bound_ = static_cast<int>(w.letters.size() * w.letters.size()) + 1;

    Acc state;
    state.emplace(FWord(), Policy::one());
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
      if (it->power == 0) continue;
      Acc next;
      if (it->kind == LetterKind::F) {
        for (const auto& [fw, c] : state) prepend_into(it->index, it->power, fw, c, next);
      } else {
        for (const auto& [fw, c] : state) {
          if (it->power == 0) {
            add_into(next, fw, c);
            continue;
          }
          const Comb& sub = apply_e(it->index, it->power, fw, 0);
          for (const auto& [fw2, c2] : sub) add_into(next, fw2, Policy::mul(c, c2));
        }
      }
      state = std::move(next);
      if (state.empty()) break;
    }
    scratch_.clear();
    auto found = state.find(FWord());
    return found == state.end() ? Coeff() : found->second;
  }

  std::size_t memo_size() const { return memo_.size(); }

 private:
  void validate(const LadderWord& w) const {
    if (w.sides != 2 * m_)
      throw EvalError("word has " + std::to_string(w.sides) + " sides, evaluator expects " +
                      std::to_string(2 * m_));
    for (const auto& l : w.letters)
      if (l.index < 1 || l.index > 2 * m_ - 1)
        throw EvalError("letter index out of range: " + to_string(l));
  }

  // some suffix drives one of the last m slots negative
  bool word_tail_negative(const LadderWord& w) const {
    int slot[65] = {0};
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
      const int i = it->index;
      const int d = it->kind == LetterKind::E ? it->power : -it->power;
      slot[i] += d;
      slot[i + 1] -= d;
      if ((i > m_ && slot[i] < 0) || (i + 1 > m_ && slot[i + 1] < 0)) return true;
    }
    return false;
  }

  bool tail_negative(const FWord& w) const {
    int slot[65] = {0};
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      const int i = letter_index(*it);
      const int p = letter_power(*it);
      slot[i] -= p;
      slot[i + 1] += p;
      if (i > m_ && slot[i] < 0) return true;
    }
    return false;
  }

  // lexicographic normal form modulo far commutation, merging equal neighbours
  FWord normalize(const FWord& in, LaurentQ& factor) const {
    const std::size_t len = in.size();
    FWord out;
    out.reserve(len);
    std::uint64_t used = 0;
    for (std::size_t step = 0; step < len; ++step) {
      std::uint64_t seen = 0;
      std::size_t best = len;
      for (std::size_t k = 0; k < len; ++k) {
        if (used >> k & 1u) continue;
        const int idx = letter_index(in[k]);
        const std::uint64_t near = (std::uint64_t{7} << idx) >> 1;
        if ((seen & near) == 0 && (best == len || idx < letter_index(in[best]))) best = k;
        seen |= std::uint64_t{1} << idx;
      }
      used |= std::uint64_t{1} << best;
      const int idx = letter_index(in[best]);
      const int p = letter_power(in[best]);
      if (!out.empty() && letter_index(out.back()) == idx) {
        const int prev = letter_power(out.back());
        factor *= qbinom_laurent(prev + p, p);
        out.back() = pack(idx, prev + p);
      } else {
        out.push_back(in[best]);
      }
    }
    return out;
  }

  static void add_into(Acc& acc, const FWord& w, const Coeff& c) {
    if (Policy::is_zero(c)) return;
    auto [it, inserted] = acc.try_emplace(w, c);
    if (inserted) return;
    Policy::add(it->second, c);
    if (Policy::is_zero(it->second)) acc.erase(it);
  }

  // acc[F_j^(p) w] += c
  void prepend_into(int j, int p, const FWord& w, const Coeff& c, Acc& acc) const {
    LaurentQ factor(1);
    FWord nw;
    if (!w.empty() && letter_index(w.front()) == j) {
      const int p2 = letter_power(w.front());
      factor = qbinom_laurent(p + p2, p);
      nw = w;
      nw.front() = pack(j, p + p2);
    } else {
      nw.reserve(w.size() + 1);
      nw.push_back(pack(j, p));
      nw.append(w);
    }
    if (opt_.canonical && nw.size() > 1) nw = normalize(nw, factor);
    if (tail_negative(nw)) return;
    if (factor.is_one()) {
      add_into(acc, nw, c);
    } else {
      Coeff scaled = c;
      Policy::mul_laurent(scaled, factor);
      add_into(acc, nw, scaled);
    }
  }

  const Coeff& binom(int lin, int t, bool with_n) {
    const std::uint64_t key = (static_cast<std::uint64_t>(static_cast<std::uint32_t>(lin)) << 32) |
                              (static_cast<std::uint64_t>(t) << 1) | (with_n ? 1u : 0u);
    auto it = binom_cache_.find(key);
    if (it != binom_cache_.end()) return it->second;
    return binom_cache_.emplace(key, policy_.binom(lin, t, with_n)).first->second;
  }

  // combination E_i^(r) w for r > 0, as F-words
  const Comb& apply_e(int i, int r, const FWord& w, int depth) {
    if (depth > depth_bound_) throw std::logic_error("rewrite depth bound exceeded");
    if (w.empty()) return empty_;
    int available = 0;
    for (char32_t c : w)
      if (letter_index(c) == i) available += letter_power(c);
    if (available < r) return empty_;

    FWord key;
    if (opt_.memo) {
      key.reserve(w.size() + 1);
      key.push_back(pack(i, r));
      key.append(w);
      auto it = memo_.find(key);
      if (it != memo_.end()) return it->second;
    }

    Acc acc;
    const int j = letter_index(w.front());
    const int s = letter_power(w.front());
    const FWord rest = w.substr(1);
    if (j != i) {
      if (opt_.trace)
        *opt_.trace << "commute E" << i << "^(" << r << ") past F" << j << "^(" << s << ") | "
                    << render(rest) << '\n';
      const Comb& sub = apply_e(i, r, rest, depth + 1);
      for (const auto& [fw, c] : sub) prepend_into(j, s, fw, c, acc);
    } else {
      // <mu, alpha_i> without its n-part, mu the weight to the right of F_i^(s)
      int lin = r - s;
      for (char32_t c : rest) {
        const int k = letter_index(c);
        if (k == i) lin -= 2 * letter_power(c);
        else if (k == i - 1 || k == i + 1) lin += letter_power(c);
      }
      const bool with_n = i == m_;
      const int tmax = std::min(r, s);
      if (opt_.trace)
        *opt_.trace << "swap E" << i << "^(" << r << ") F" << i << "^(" << s << ") | " << render(rest)
                    << " : binomial top " << lin << (with_n ? " + n" : "") << ", t = 0.." << tmax
                    << '\n';
      for (int t = 0; t <= tmax; ++t) {
        const Coeff& b = binom(lin, t, with_n);
        if (Policy::is_zero(b)) continue;
        if (r - t == 0) {
          if (s - t > 0) prepend_into(i, s - t, rest, b, acc);
          else add_into(acc, rest, b);
          continue;
        }
        const Comb& sub = apply_e(i, r - t, rest, depth + 1);
        for (const auto& [fw, c] : sub) {
          Coeff bc = Policy::mul(b, c);
          if (s - t > 0) prepend_into(i, s - t, fw, bc, acc);
          else add_into(acc, fw, bc);
        }
      }
    }
    Comb out(std::make_move_iterator(acc.begin()), std::make_move_iterator(acc.end()));
    if (opt_.memo) return memo_.emplace(std::move(key), std::move(out)).first->second;
    scratch_.push_back(std::move(out));
    return scratch_.back();
  }

  int m_;
  Policy policy_;
  EvalOptions opt_;
  int depth_bound_ = 0;
  Comb empty_;
  std::unordered_map<FWord, Comb> memo_;
  std::deque<Comb> scratch_;
  std::unordered_map<std::uint64_t, Coeff> binom_cache_;
};

LaurentQ term_scalar(const Term& t) { return LaurentQ::monomial(t.sign, t.q_power); }

}  // namespace

struct Evaluator::Impl {
  Impl(int m, EvalOptions opt) : engine(m, GenericPolicy{}, opt) {}
  Engine<GenericPolicy> engine;
  detail::CycloFrac total;
};

Evaluator::Evaluator(int m, EvalOptions opt) : impl_(std::make_unique<Impl>(m, opt)) {}
Evaluator::~Evaluator() = default;
Evaluator::Evaluator(Evaluator&&) noexcept = default;
Evaluator& Evaluator::operator=(Evaluator&&) noexcept = default;

XPoly Evaluator::ev(const LadderWord& w) { return impl_->engine.ev(w).to_xpoly(); }

void Evaluator::accumulate(const Term& t) {
  detail::CycloFrac v = impl_->engine.ev(t.word);
  v.mul_laurent(term_scalar(t));
  impl_->total.add(v);
}

void Evaluator::absorb(Evaluator& other) { impl_->total.add(other.impl_->total); }

XPoly Evaluator::total() const { return impl_->total.to_xpoly(); }

std::size_t Evaluator::memo_size() const { return impl_->engine.memo_size(); }

struct SpecializedEvaluator::Impl {
  Impl(int m, int n, EvalOptions opt) : engine(m, SpecialPolicy{n}, opt) {}
  Engine<SpecialPolicy> engine;
  LaurentQ total;
};

SpecializedEvaluator::SpecializedEvaluator(int m, int n, EvalOptions opt)
    : impl_(std::make_unique<Impl>(m, n, opt)) {}
SpecializedEvaluator::~SpecializedEvaluator() = default;
SpecializedEvaluator::SpecializedEvaluator(SpecializedEvaluator&&) noexcept = default;
SpecializedEvaluator& SpecializedEvaluator::operator=(SpecializedEvaluator&&) noexcept = default;

RatQ SpecializedEvaluator::ev(const LadderWord& w) { return RatQ(impl_->engine.ev(w)); }

void SpecializedEvaluator::accumulate(const Term& t) {
  impl_->total += impl_->engine.ev(t.word) * term_scalar(t);
}

void SpecializedEvaluator::absorb(SpecializedEvaluator& other) { impl_->total += other.impl_->total; }

RatQ SpecializedEvaluator::total() const { return RatQ(impl_->total); }

XPoly ev(const LadderWord& w, const EvalOptions& opt) {
  Evaluator e(w.strands(), opt);
  return e.ev(w);
}

RatQ ev_specialized(const LadderWord& w, int n, const EvalOptions& opt) {
  SpecializedEvaluator e(w.strands(), n, opt);
  return e.ev(w);
}

}  // namespace qhomfly
