#include <gtest/gtest.h>

#include "qhomfly/invariants.hpp"
#include "qhomfly/qcomb.hpp"

using namespace qhomfly;

namespace {

LaurentQ qq(int e) { return LaurentQ::q_power(e); }
const Braid kUnknot{1, {}};
const Braid kTrefoil{2, {1, 1, 1}};
const Braid kHopf{2, {1, 1}};

// q -> q^-1 and x -> x^-1
XPoly bar_both(const XPoly& p) { return p.q_inverted().x_inverted(); }

}  // namespace

TEST(Partition, Basics) {
  const Partition p({3, 1, 1});
  EXPECT_EQ(p.transpose(), p);
  EXPECT_EQ(Partition({3, 1}).transpose(), Partition({2, 1, 1}));
  EXPECT_EQ(p.transpose().transpose(), p);
  EXPECT_EQ(Partition({2, 1}).transpose(), Partition({2, 1}));
  EXPECT_EQ(Partition({4, 2, 0, 0}).parts(), (std::vector<int>{4, 2}));
  EXPECT_EQ(Partition::column(3).transpose(), Partition::row(3));
  EXPECT_THROW(Partition({1, 2}), std::invalid_argument);
  EXPECT_EQ(parse_color("e3"), Partition::column(3));
  EXPECT_EQ(parse_color("h2"), Partition::row(2));
  EXPECT_EQ(parse_color("p<2,1>"), Partition({2, 1}));
  EXPECT_EQ(parse_color("p2,1"), Partition({2, 1}));
  EXPECT_THROW(parse_color("z1"), std::invalid_argument);
  EXPECT_THROW(parse_color("e"), std::invalid_argument);
  EXPECT_EQ(to_string(Partition({2, 1})), "p<2,1>");
  EXPECT_EQ(to_string(Partition::row(4)), "h4");
}

TEST(Invariants, Unknot) {
  for (int a = 0; a <= 5; ++a) {
    const XPoly w = w_columns(make_colored(kUnknot, {a}));
    EXPECT_EQ(w, xbinom(0, a));
    for (int n = 2; n <= 6; ++n) EXPECT_EQ(subst_x_eq_qn(w, n), qbinom(n, a));
  }
  EXPECT_EQ(w_rows(make_colored(kUnknot, {1})), w_columns(make_colored(kUnknot, {1})));
}

TEST(Invariants, TrivialColors) {
  EXPECT_EQ(w_columns(make_colored(kTrefoil, {0})), XPoly(1));
  EXPECT_EQ(w_columns(make_colored(Braid{3, {1, -2, 1, 2}}, {0})), XPoly(1));
  EXPECT_TRUE(w_columns(make_colored(kHopf, {-1, 2})).is_zero());
}

TEST(Invariants, TrefoilOracle) {
  for (int a = 0; a <= 3; ++a) EXPECT_EQ(w_columns(make_colored(kTrefoil, {a})), oracle_trefoil_sum(a)) << a;
  EXPECT_EQ(oracle_trefoil_sum(0), XPoly(1));
  EXPECT_EQ(subst_x_eq_qn(oracle_trefoil_sum(1), 2), w_columns_specialized(make_colored(kTrefoil, {1}), 2));
}

TEST(Invariants, TrefoilHomflyNormalization) {
  // 0-framed W(h_1) / W(unknot) is 2v^2 - v^4 + z^2 v^2 with v = x^-1, z = q - q^-1
  const XPoly w = to_zero_framing(w_rows(make_colored(kTrefoil, {1})), kTrefoil, {Partition::row(1)});
  const auto r = divide_exact(w, w_columns(make_colored(kUnknot, {1})));
  ASSERT_TRUE(r);
  const RatQ z2(( qq(1) - qq(-1)) * (qq(1) - qq(-1)));
  const XPoly expected = XPoly::monomial(RatQ(2) + z2, -2) - XPoly::x_power(-4);
  EXPECT_EQ(*r, expected);
}

TEST(Invariants, TorusBlackboardOracle) {
  for (int s : {1, 3, 5})
    for (int m = 0; m <= 2; ++m) {
      const XPoly w = w_rows(make_colored(Braid{2, std::vector<int>(static_cast<std::size_t>(s), 1)}, {m}));
      EXPECT_EQ(w, oracle_torus(s, m, false)) << s << "," << m;
    }
  EXPECT_EQ(oracle_torus(3, 0, true), XPoly(1));
  EXPECT_EQ(oracle_torus(5, 0, false), XPoly(1));
  // T(2,1) is the unknot with framing 1
  for (int m = 0; m <= 3; ++m)
    EXPECT_EQ(oracle_torus(1, m, false), adjust_framing(w_rows(make_colored(kUnknot, {m})), m, 1, ColorKind::Row));
}

TEST(Invariants, ComponentPermutation) {
  EXPECT_EQ(w_columns(make_colored(kHopf, {1, 2})), w_columns(make_colored(kHopf, {2, 1})));
  // a split unknot next to the Hopf link, placed on either side
  const XPoly a = w_columns(make_colored(Braid{3, {1, 1}}, {1, 2, 1}));
  EXPECT_EQ(a, w_columns(make_colored(Braid{3, {2, 2}}, {1, 1, 2})));
  EXPECT_EQ(a, w_columns(make_colored(Braid{3, {1, 1}}, {2, 1, 1})));
}

TEST(Invariants, TransposeInvolution) {
  for (int a = 0; a <= 2; ++a) {
    const ColoredBraid cb = make_colored(kTrefoil, {a});
    EXPECT_EQ(subst_q_bar(w_rows(cb)), w_columns(cb));
  }
  EXPECT_EQ(subst_q_bar(w_rows(make_colored(kHopf, {1, 1}))), w_columns(make_colored(kHopf, {1, 1})));
}

TEST(Invariants, MirrorDuality) {
  for (int a = 1; a <= 2; ++a) {
    const XPoly w = w_columns(make_colored(kTrefoil, {a}));
    const XPoly mw = w_columns(make_colored(mirror(kTrefoil), {a}));
    EXPECT_EQ(mw, bar_both(w));
    for (int n : {2, 3}) EXPECT_EQ(subst_x_eq_qn(mw, n), subst_x_eq_qn(w, n).inverted());
  }
  const XPoly h = w_columns(make_colored(Braid{3, {1, -2, 1, -2}}, {1}));
  EXPECT_EQ(w_columns(make_colored(mirror(Braid{3, {1, -2, 1, -2}}), {1})), bar_both(h));
}

TEST(Invariants, Integrality) {
  for (int n = 2; n <= 4; ++n)
    for (int a = 0; a <= n - 1 && a <= 3; ++a) {
      for (const Braid& b : {kUnknot, kTrefoil, Braid{2, {1, 1, 1, 1, 1}}, Braid{3, {1, -2, 1, -2}}}) {
        const XPoly w = w_columns(make_colored(b, {a}));
        EXPECT_TRUE(is_integral_laurent(subst_x_eq_qn(w, n)).integral) << to_string(b) << " a=" << a << " n=" << n;
        EXPECT_TRUE(is_integral_laurent(subst_x_eq_qn(subst_q_bar(w), n)).integral);
      }
      EXPECT_TRUE(is_integral_laurent(subst_x_eq_qn(w_columns(make_colored(kHopf, {a, 1})), n)).integral);
    }
}

TEST(Invariants, SpecializedEngine) {
  for (int a = 0; a <= 2; ++a)
    for (int n = 2; n <= 4; ++n) {
      const ColoredBraid cb = make_colored(Braid{3, {1, -2, 1}}, {a, 1});
      EXPECT_EQ(w_columns_specialized(cb, n), subst_x_eq_qn(w_columns(cb), n));
    }
}

TEST(Invariants, ParallelJobsIdentical) {
  const ColoredBraid cb = make_colored(Braid{3, {1, -2, 1, -2}}, {2});
  InvariantOptions one, four;
  four.jobs = 4;
  EXPECT_EQ(w_columns(cb, one), w_columns(cb, four));
  EXPECT_EQ(w_columns_specialized(cb, 3, one), w_columns_specialized(cb, 3, four));
}

TEST(Framing, ClosedForms) {
  for (int a = 0; a <= 4; ++a) {
    EXPECT_EQ(framing_factor(a, ColorKind::Column), XPoly::monomial(RatQ(qq(a - a * a)), a));
    EXPECT_EQ(framing_factor(a, ColorKind::Row), XPoly::monomial(RatQ(qq(a * a - a)), a));
  }
  EXPECT_EQ(framing_factor(Partition::row(3)), framing_factor(3, ColorKind::Row));
}

TEST(Framing, GroupLaw) {
  const XPoly u = w_columns(make_colored(kUnknot, {2}));
  EXPECT_EQ(adjust_framing(u, 2, 0), u);
  EXPECT_EQ(adjust_framing(adjust_framing(u, 2, 1), 2, -1), u);
  EXPECT_EQ(adjust_framing(u, 2, 1), w_columns(make_colored(Braid{2, {1}}, {2})));
  EXPECT_EQ(adjust_framing(u, 2, -2), w_columns(make_colored(Braid{3, {-1, -2}}, {2})));
}

TEST(JacobiTrudi, SmallCases) {
  const ColoredBraid u = make_colored(kUnknot, {0});
  EXPECT_EQ(w_partition(u, Partition::row(2), 1), w_rows(make_colored(kUnknot, {2})));
  EXPECT_EQ(w_partition(u, Partition::row(2), 2), w_rows(make_colored(kUnknot, {2})));
  EXPECT_EQ(w_partition(u, Partition({1, 1}), 2), w_columns(make_colored(kUnknot, {2})));
  EXPECT_EQ(w_partition(make_colored(kTrefoil, {0}), Partition::row(2), 1), w_rows(make_colored(kTrefoil, {2})));
  EXPECT_THROW(w_partition(u, Partition({1, 1}), 1), std::invalid_argument);
}

TEST(JacobiTrudi, RoutesAgree) {
  const std::vector<Partition> hook{Partition({2, 1})};
  const XPoly t = w_colored(kUnknot, hook, JtRoute::Transpose);
  const XPoly d = w_colored(kUnknot, hook, JtRoute::Direct);
  EXPECT_EQ(t, d);
  // at x = q^n the hook (2,1) on the unknot is the sl_n quantum dimension
  for (int n = 3; n <= 4; ++n) EXPECT_TRUE(is_integral_laurent(subst_x_eq_qn(t, n)).integral);
  EXPECT_EQ(w_colored(kTrefoil, {Partition::row(2)}, JtRoute::Direct), w_rows(make_colored(kTrefoil, {2})));
  EXPECT_EQ(w_colored(kHopf, {Partition::row(1), Partition::column(2)}),
            w_columns(make_colored(kHopf, {1, 2})));
}

TEST(JacobiTrudi, OtherComponentsKeepColumns) {
  const ColoredBraid hopf = make_colored(kHopf, {1, 2});
  EXPECT_EQ(w_partition(hopf, Partition({1}), 1), w_columns(hopf));
  EXPECT_EQ(w_partition(hopf, Partition({1, 1}), 2), w_columns(make_colored(kHopf, {2, 2})));
}

TEST(Oracles, TrefoilSupportFinite) {
  for (int a = 0; a <= 4; ++a) EXPECT_FALSE(oracle_trefoil_sum(a).is_zero());
  EXPECT_THROW(oracle_trefoil_sum(-1), std::invalid_argument);
  EXPECT_THROW(oracle_torus(4, 1, true), std::invalid_argument);
}
