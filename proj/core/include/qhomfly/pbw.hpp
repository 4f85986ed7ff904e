#pragma once

#include <iosfwd>
#include <memory>
#include <stdexcept>

#include "qhomfly/ladder.hpp"
#include "qhomfly/qfield.hpp"

namespace qhomfly {

class EvalError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct EvalOptions {
  bool memo = true;
  // normal-order commuting F letters so equal F-words share memo entries
  bool canonical = true;
  // one line per rewrite step
  std::ostream* trace = nullptr;
};

// ev of a word applied to the highest weight (n^m, 0^m) with x = q^n generic.
XPoly ev(const LadderWord& w, const EvalOptions& opt = {});
// the same recursion with n numeric
RatQ ev_specialized(const LadderWord& w, int n, const EvalOptions& opt = {});

// Generic evaluator whose memo persists across words of one computation.
class Evaluator {
 public:
  explicit Evaluator(int m, EvalOptions opt = {});
  ~Evaluator();
  Evaluator(Evaluator&&) noexcept;
  Evaluator& operator=(Evaluator&&) noexcept;

  XPoly ev(const LadderWord& w);
  // total += scalar(t) * ev(t.word)
  void accumulate(const Term& t);
  // total += other's total
  void absorb(Evaluator& other);
  XPoly total() const;
  std::size_t memo_size() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

class SpecializedEvaluator {
 public:
  SpecializedEvaluator(int m, int n, EvalOptions opt = {});
  ~SpecializedEvaluator();
  SpecializedEvaluator(SpecializedEvaluator&&) noexcept;
  SpecializedEvaluator& operator=(SpecializedEvaluator&&) noexcept;

  RatQ ev(const LadderWord& w);
  void accumulate(const Term& t);
  void absorb(SpecializedEvaluator& other);
  RatQ total() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace qhomfly
