#include <gtest/gtest.h>

#include <functional>

#include "qhomfly/braid.hpp"

using namespace qhomfly;

TEST(Braid, Parse) {
  EXPECT_EQ(parse_braid("1 1 1", 2).word, (std::vector<int>{1, 1, 1}));
  EXPECT_EQ(parse_braid("1 -2 1", 3).word, (std::vector<int>{1, -2, 1}));
  EXPECT_EQ(parse_braid("1,+2, -1", 3).word, (std::vector<int>{1, 2, -1}));
  EXPECT_TRUE(parse_braid("", 1).word.empty());
  EXPECT_THROW(parse_braid("3", 2), BraidParseError);
  EXPECT_THROW(parse_braid("0", 2), BraidParseError);
  EXPECT_THROW(parse_braid("1 a", 2), BraidParseError);
  try {
    parse_braid("1 -4", 3);
    FAIL();
  } catch (const BraidParseError& e) {
    EXPECT_EQ(e.token(), "-4");
  }
  EXPECT_EQ(to_string(parse_braid("1 -2", 3)), "1 -2");
}

TEST(Braid, Closure) {
  const auto t = closure_info(Braid{2, {1, 1, 1}});
  EXPECT_EQ(t.component_count, 1);
  EXPECT_EQ(t.linking[0][0], 3);
  const auto h = closure_info(Braid{2, {1, 1}});
  EXPECT_EQ(h.component_count, 2);
  EXPECT_EQ(h.linking[0][1], 1);
  EXPECT_EQ(h.linking[1][0], 1);
  EXPECT_EQ(h.linking[0][0], 0);
  const auto u = closure_info(Braid{1, {}});
  EXPECT_EQ(u.component_count, 1);
  EXPECT_EQ(u.linking[0][0], 0);
  const auto w = closure_info(Braid{3, {1, -2, 1, -2}});
  EXPECT_EQ(w.component_count, 1);
  EXPECT_EQ(w.linking[0][0], 0);
  const auto c = closure_info(Braid{3, {2}});
  EXPECT_EQ(c.component_count, 2);
  EXPECT_EQ(c.component_of_strand, (std::vector<int>{0, 1, 1}));
}

TEST(Braid, ColoredStrands) {
  const auto cb = make_colored(Braid{3, {2}}, {4, 7});
  EXPECT_EQ(cb.strand_colors(), (std::vector<int>{4, 7, 7}));
  EXPECT_THROW(make_colored(Braid{3, {2}}, {4}), std::invalid_argument);
}

TEST(Braid, Permutation) {
  EXPECT_EQ(permutation(Braid{3, {1}}), (std::vector<int>{1, 0, 2}));
  EXPECT_EQ(permutation(Braid{3, {1, 2}}), permutation(Braid{3, {-1, -2}}));
}

TEST(Cable, Examples) {
  const std::vector<int> two{2};
  const Cable u = cable(Braid{1, {}}, two);
  EXPECT_EQ(u.braid.strands, 2);
  EXPECT_TRUE(u.braid.word.empty());
  EXPECT_EQ(closure_info(u.braid).component_count, 2);

  const Cable x = cable(Braid{2, {1}}, std::vector<int>{2});
  EXPECT_EQ(x.braid.strands, 4);
  EXPECT_EQ(x.braid.word.size(), 4u);
  EXPECT_EQ(permutation(x.braid), (std::vector<int>{2, 3, 0, 1}));

  const Cable t = cable(Braid{2, {1, 1, 1}}, std::vector<int>{2});
  EXPECT_EQ(closure_info(t.braid).component_count, 2);
  EXPECT_THROW(cable(Braid{2, {1}}, std::vector<int>{0}), std::invalid_argument);
}

// every braid with at most 3 crossings on at most 3 strands
static void for_small_braids(const std::function<void(const Braid&)>& f) {
  for (int m = 1; m <= 3; ++m) {
    std::vector<int> gens;
    for (int i = 1; i < m; ++i) {
      gens.push_back(i);
      gens.push_back(-i);
    }
    std::function<void(Braid&, int)> rec = [&](Braid& b, int left) {
      f(b);
      if (left == 0) return;
      for (int g : gens) {
        b.word.push_back(g);
        rec(b, left - 1);
        b.word.pop_back();
      }
    };
    Braid b{m, {}};
    rec(b, 3);
  }
}

TEST(Cable, PermutationIsBlockSubstitution) {
  int checked = 0;
  for_small_braids([&](const Braid& b) {
    const ClosureInfo info = closure_info(b);
    for (int w0 = 1; w0 <= 2; ++w0) {
      std::vector<int> widths(static_cast<std::size_t>(info.component_count), 1);
      widths[0] = w0;
      if (info.component_count > 1) widths[1] = 3 - w0;
      const Cable c = cable(b, widths);
      // block offsets of bottom positions
      std::vector<int> width_at, offset(static_cast<std::size_t>(b.strands) + 1, 0);
      for (int p = 0; p < b.strands; ++p) {
        width_at.push_back(widths[info.component_of_strand[p]]);
        offset[p + 1] = offset[p] + width_at.back();
      }
      const auto perm = permutation(b);
      const auto cperm = permutation(c.braid);
      // top offsets
      std::vector<int> top_width(static_cast<std::size_t>(b.strands));
      for (int p = 0; p < b.strands; ++p) top_width[perm[p]] = width_at[p];
      std::vector<int> top_offset(static_cast<std::size_t>(b.strands) + 1, 0);
      for (int p = 0; p < b.strands; ++p) top_offset[p + 1] = top_offset[p] + top_width[p];
      for (int p = 0; p < b.strands; ++p)
        for (int k = 0; k < width_at[p]; ++k) ASSERT_EQ(cperm[offset[p] + k], top_offset[perm[p]] + k);
      // each crossing becomes a block of w_left * w_right crossings of its sign
      std::vector<int> cur = width_at;
      int expected = 0;
      for (std::size_t j = b.word.size(); j-- > 0;) {
        const int i = std::abs(b.word[j]);
        expected += (b.word[j] > 0 ? 1 : -1) * cur[i - 1] * cur[i];
        std::swap(cur[i - 1], cur[i]);
      }
      int cabled = 0;
      for (int g : c.braid.word) cabled += g > 0 ? 1 : -1;
      EXPECT_EQ(cabled, expected);
      std::size_t blocks = 0;
      cur = width_at;
      for (std::size_t j = b.word.size(); j-- > 0;) {
        const int i = std::abs(b.word[j]);
        blocks += static_cast<std::size_t>(cur[i - 1] * cur[i]);
        std::swap(cur[i - 1], cur[i]);
      }
      EXPECT_EQ(c.braid.word.size(), blocks);
      ++checked;
    }
  });
  EXPECT_GT(checked, 100);
}

TEST(Cable, ParallelLinking) {
  const Braid t{2, {1, 1, 1}};
  for (int l = 2; l <= 3; ++l) {
    const Cable c = cable(t, std::vector<int>{l});
    const ClosureInfo info = closure_info(c.braid);
    ASSERT_EQ(info.component_count, l);
    for (int i = 0; i < l; ++i)
      for (int j = 0; j < l; ++j) EXPECT_EQ(info.linking[c.copies[0][i]][c.copies[0][j]], 3);
  }
}

TEST(Cable, FirstComponent) {
  const ColoredBraid cb = make_colored(Braid{2, {1, 1}}, {1, 2});
  const ColoredBraid c = cable_first_component(cb, 2, std::vector<int>{3, 4});
  EXPECT_EQ(c.braid.strands, 3);
  EXPECT_EQ(c.colors.size(), 3u);
  EXPECT_EQ(c.strand_colors(), (std::vector<int>{3, 4, 2}));
  EXPECT_THROW(cable_first_component(cb, 0, std::vector<int>{}), std::invalid_argument);
  const ColoredBraid t = cable_first_component(make_colored(Braid{2, {1, 1, 1}}, {1}), 2, std::vector<int>{1, 1});
  EXPECT_EQ(closure_info(t.braid).component_count, 2);
}

TEST(Braid, Mirror) { EXPECT_EQ(mirror(Braid{3, {1, -2}}).word, (std::vector<int>{-1, 2})); }
