// Acceptance suite: one PASS/FAIL line per criterion, DIAG lines for context.
// Exit status is 0 only when every criterion passes.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qhomfly/invariants.hpp"
#include "qhomfly/ladder.hpp"
#include "qhomfly/pbw.hpp"
#include "qhomfly/qcomb.hpp"
#include "qhomfly/qholo.hpp"
#include "random_words.hpp"

using namespace qhomfly;

namespace {

const Braid kUnknot{1, {}};
const Braid kTrefoil{2, {1, 1, 1}};

struct Outcome {
  bool pass = true;
  std::string detail;

  void check(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

// invariants produced by criteria 1-4, with their largest color, for criterion 5
struct Computed {
  std::string label;
  XPoly value;
  int max_color;
};
std::vector<Computed> g_computed;

void diag(const std::string& s) { std::cout << "DIAG " << s << '\n'; }

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Sequence zero_framed_trefoil_rows(int last) {
  Sequence f;
  for (int m = 0; m <= last; ++m) {
    const XPoly w = w_rows(make_colored(kTrefoil, {m}));
    f.values.push_back(to_zero_framing(w, kTrefoil, {Partition::row(m)}));
  }
  return f;
}

std::string describe_ratio(const XPoly& a, const XPoly& b) {
  if (b.is_zero()) return "undefined";
  auto r = divide_exact(a, b);
  return r ? to_string(*r) : "not a polynomial";
}

Outcome criterion1() {
  Outcome o;
  for (int a = 0; a <= 3; ++a) {
    const XPoly w = w_columns(make_colored(kTrefoil, {a}));
    g_computed.push_back({"trefoil e" + std::to_string(a), w, a});
    o.check(w == oracle_trefoil_sum(a), "a=" + std::to_string(a) + " differs");
  }
  return o;
}

Outcome criterion2() {
  Outcome o;
  const RecOperator p = parse_operator(read_file(QHOMFLY_TRE_FILE));
  const Sequence f = zero_framed_trefoil_rows(4);
  for (int m = 0; m <= 4; ++m) g_computed.push_back({"0-framed trefoil h" + std::to_string(m), f.at(m), m});
  for (int m = 0; m <= 2; ++m) o.check(apply(p, f, m).is_zero(), "nonzero at m=" + std::to_string(m));

  // context: the printed operator against the printed 0-framed torus formula, and a
  // framing-conjugated operator against the engine sequence
  Sequence printed;
  for (int m = 0; m <= 6; ++m) printed.values.push_back(oracle_torus(3, m, true));
  diag("criterion 2: transcribed operator annihilates the closed-form 0-framed T(2,3) sequence on m=0..4: " +
       std::string(verify(p, printed, 0, 4) ? "yes" : "no"));
  std::vector<RecOperator::Poly> conj = p.coeffs();
  for (int j = 0; j < static_cast<int>(conj.size()); ++j)
    for (auto& [k, c] : conj[j]) c = c * XPoly::monomial(RatQ(LaurentQ::q_power(-6 * j)), 3 * j);
  const Sequence longer = zero_framed_trefoil_rows(6);
  diag("criterion 2: operator with c_j multiplied by (q^-6 x^3)^j annihilates the engine 0-framed sequence on m=0..4: " +
       std::string(verify(RecOperator(conj), longer, 0, 4) ? "yes" : "no"));
  for (int m = 1; m <= 2; ++m)
    diag("criterion 2: engine / closed form at m=" + std::to_string(m) + ": " +
         describe_ratio(f.at(m), printed.at(m)));
  return o;
}

Outcome criterion3() {
  Outcome o;
  int zero_ok = 0, board_ok = 0;
  for (int s : {3, 5}) {
    const Braid b{2, std::vector<int>(static_cast<std::size_t>(s), 1)};
    for (int m = 0; m <= 2; ++m) {
      const std::string at = "s=" + std::to_string(s) + " m=" + std::to_string(m);
      const XPoly board = w_rows(make_colored(b, {m}));
      const XPoly zero = to_zero_framing(board, b, {Partition::row(m)});
      g_computed.push_back({"T(2," + std::to_string(s) + ") h" + std::to_string(m), board, m});
      g_computed.push_back({"0-framed T(2," + std::to_string(s) + ") h" + std::to_string(m), zero, m});
      const bool zb = zero == oracle_torus(s, m, true);
      const bool bb = board == oracle_torus(s, m, false);
      zero_ok += zb;
      board_ok += bb;
      o.check(zb, "0-framed " + at + " differs");
      o.check(bb, "blackboard " + at + " differs");
      if (!zb) diag("criterion 3: engine 0-framed / closed form at " + at + ": " + describe_ratio(zero, oracle_torus(s, m, true)));
    }
  }
  diag("criterion 3: blackboard matches " + std::to_string(board_ok) + "/6, 0-framed matches " +
       std::to_string(zero_ok) + "/6");
  diag("criterion 3: unit framing factor for h_1 from the engine: " + to_string(framing_factor(1, ColorKind::Row)) +
       ", for h_2: " + to_string(framing_factor(2, ColorKind::Row)));
  return o;
}

Outcome criterion4() {
  Outcome o;
  for (int a = 0; a <= 5; ++a) {
    const XPoly w = w_columns(make_colored(kUnknot, {a}));
    g_computed.push_back({"unknot e" + std::to_string(a), w, a});
    o.check(w == xbinom(0, a), "a=" + std::to_string(a) + " differs from xbinom");
    for (int n = 2; n <= 6; ++n)
      o.check(subst_x_eq_qn(w, n) == qbinom(n, a), "a=" + std::to_string(a) + " n=" + std::to_string(n));
  }
  return o;
}

Outcome criterion5() {
  Outcome o;
  int checked = 0;
  for (const auto& c : g_computed)
    for (int n = 2; n <= 4; ++n) {
      if (c.max_color > n - 1) continue;
      ++checked;
      o.check(is_integral_laurent(subst_x_eq_qn(c.value, n)).integral, c.label + " at n=" + std::to_string(n));
    }
  o.check(checked > 0, "nothing to check");
  if (o.pass) o.detail = std::to_string(checked) + " specializations";
  return o;
}

Outcome criterion6() {
  Outcome o;
  int words = 0;
  for (int a = 0; a <= 3; ++a) {
    Evaluator gen(2);
    SpecializedEvaluator s2(2, 2), s3(2, 3);
    for (const auto& t : enumerate_terms(make_colored(kTrefoil, {a}))) {
      ++words;
      const XPoly g = gen.ev(t.word);
      o.check(subst_x_eq_qn(g, 2) == s2.ev(t.word), to_string(t.word) + " n=2");
      o.check(subst_x_eq_qn(g, 3) == s3.ev(t.word), to_string(t.word) + " n=3");
    }
  }
  if (o.pass) o.detail = std::to_string(words) + " words";
  return o;
}

Outcome criterion7() {
  Outcome o;
  const XPoly jt = w_partition(make_colored(kTrefoil, {1}), Partition({1, 1}), 2);
  o.check(jt == w_columns(make_colored(kTrefoil, {2})), "(1,1) with two parallels differs from e2");
  return o;
}

Outcome criterion8() {
  Outcome o;
  const Braid hopf{2, {1, 1}};
  o.check(w_columns(make_colored(hopf, {1, 2})) == w_columns(make_colored(hopf, {2, 1})), "component permutation");

  for (int a = 0; a <= 2; ++a) {
    const ColoredBraid cb = make_colored(kTrefoil, {a});
    const XPoly col = w_columns(cb);
    o.check(subst_q_bar(w_rows(cb)) == col, "rows then bar, a=" + std::to_string(a));
    o.check(subst_q_bar(subst_q_bar(col)) == col, "bar involution, a=" + std::to_string(a));
  }
  o.check(w_rows(make_colored(kUnknot, {1})) == w_columns(make_colored(kUnknot, {1})), "h1 = e1 on the unknot");
  o.check(w_colored(kUnknot, {Partition({2, 1})}, JtRoute::Transpose) ==
              w_colored(kUnknot, {Partition({2, 1})}, JtRoute::Direct),
          "self-transpose (2,1)");

  std::mt19937 rng(20240611);
  int swaps = 0, merges = 0;
  for (int it = 0; it < 100; ++it) {
    const LadderWord w = qhomfly::testing::random_balanced_word(rng, 2 + it % 2, 8, 2);
    const XPoly v = ev(w);
    for (std::size_t k = 0; k + 1 < w.letters.size(); ++k) {
      const Letter a = w.letters[k], b = w.letters[k + 1];
      if (std::abs(a.index - b.index) > 1 || (a.kind != b.kind && a.index != b.index)) {
        LadderWord sw = w;
        std::swap(sw.letters[k], sw.letters[k + 1]);
        o.check(ev(sw) == v, "commuting swap in " + to_string(w));
        ++swaps;
      }
      if (a.kind == b.kind && a.index == b.index) {
        LadderWord mw = w;
        mw.letters[k].power = a.power + b.power;
        mw.letters.erase(mw.letters.begin() + static_cast<long>(k) + 1);
        o.check(v == ev(mw) * qbinom(a.power + b.power, a.power), "merge in " + to_string(w));
        ++merges;
      }
    }
  }
  if (o.pass) o.detail = std::to_string(swaps) + " swaps, " + std::to_string(merges) + " merges";
  return o;
}

Outcome criterion9() {
  Outcome o;
  Sequence f;
  for (int a = 0; a <= 8; ++a) f.values.push_back(w_columns(make_colored(kUnknot, {a})));
  const auto p = guess(f, 1, 2);
  o.check(p.has_value(), "no operator found");
  if (!p) return o;
  o.check(p->order() == 1, "order " + std::to_string(p->order()));
  Sequence ext = f;
  ext.values.push_back(w_columns(make_colored(kUnknot, {9})));
  o.check(verify(*p, ext, 0, 8), "verify failed");
  if (o.pass) o.detail = to_string(*p);
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"trefoil golden formula, e_a for a=0..3", criterion1},
      {"trefoil recursion on the 0-framed h_m sequence, m=0..2", criterion2},
      {"torus T(2,3), T(2,5) row colors against closed forms, m=0..2", criterion3},
      {"unknot e_a for a=0..5 and its specializations", criterion4},
      {"integrality of the specializations at n=2,3,4", criterion5},
      {"generic and specialized evaluation agree on the trefoil words", criterion6},
      {"Jacobi-Trudi (1,1) with two parallels equals e_2 on the trefoil", criterion7},
      {"symmetry, transpose, commuting and merge properties", criterion8},
      {"recurrence guessing on the unknot e-sequence", criterion9},
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    all = all && o.pass;
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << (o.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first << " [" << secs << " s]";
    if (!o.detail.empty()) line << " (" << o.detail << ")";
    std::cout << line.str() << std::endl;
  }
  return all ? 0 : 1;
}
