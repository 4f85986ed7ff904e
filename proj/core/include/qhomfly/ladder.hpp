#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qhomfly/braid.hpp"
#include "qhomfly/qfield.hpp"

namespace qhomfly {

enum class LetterKind : std::uint8_t { E, F };

// Divided power E_i^(p) or F_i^(p); a negative power is the zero element.
struct Letter {
  LetterKind kind = LetterKind::E;
  int index = 1;
  int power = 0;

  friend bool operator==(const Letter&, const Letter&) = default;
};

inline Letter E(int i, int p) { return {LetterKind::E, i, p}; }
inline Letter F(int i, int p) { return {LetterKind::F, i, p}; }

// Word in E/F letters on 2m sides, applied right to left to the highest weight.
struct LadderWord {
  int sides = 2;
  std::vector<Letter> letters;

  int strands() const { return sides / 2; }
  friend bool operator==(const LadderWord&, const LadderWord&) = default;
};

LadderWord concat(const LadderWord& a, const LadderWord& b);
std::string to_string(const Letter& l);
std::string to_string(const LadderWord& w);

// Weight (n+d_1, ..., n+d_m, d_{m+1}, ..., d_{2m}) with n symbolic.
class WeightOffset {
 public:
  explicit WeightOffset(int sides) : d_(static_cast<std::size_t>(sides), 0) {}
  void apply(const Letter& l);
  // d_i - d_{i+1}; the full pairing also carries n exactly when has_n(i)
  int pairing(int i) const { return d_[i - 1] - d_[i]; }
  bool has_n(int i) const { return 2 * i == static_cast<int>(d_.size()); }
  bool is_zero() const;
  int operator[](int slot) const { return d_[slot - 1]; }
  const std::vector<int>& offsets() const { return d_; }

 private:
  std::vector<int> d_;
};

// weight reached from the highest weight after applying the whole word
WeightOffset word_weight(const LadderWord& w);

LadderWord build_cup(std::span<const int> b, int m);
LadderWord build_cap(std::span<const int> b, int m);

struct CrossingSite {
  int ladder_index = 0;  // m + i for sigma_i
  int left = 0;          // a_i
  int right = 0;         // a_{i+1}
  int sign = 1;          // epsilon
};

std::vector<CrossingSite> crossing_weights(const ColoredBraid& cb);

// One summand of the top-level multisum: scalar * word.
struct Term {
  LadderWord word;
  std::vector<int> s;
  int sign = 1;
  int q_power = 0;

  XPoly scalar() const { return XPoly(LaurentQ::monomial(sign, q_power)); }
};

// Lexicographic enumeration of the box s_j in [max(0, a_i - a_{i+1}), |a|_inf + extra].
class TermEnumerator {
 public:
  explicit TermEnumerator(const ColoredBraid& cb, int extra = 0);
  bool next(Term& out);
  std::size_t count() const;
  int strands() const { return m_; }

 private:
  int m_ = 1;
  LadderWord cap_;
  LadderWord cup_;
  std::vector<CrossingSite> sites_;
  std::vector<int> lo_;
  std::vector<int> hi_;
  std::vector<int> s_;
  bool done_ = false;
};

std::vector<Term> enumerate_terms(const ColoredBraid& cb, int extra = 0);

// "E3^(2) F3^(1) ... @ scalar"
std::string dump_term(const Term& t);

}  // namespace qhomfly
