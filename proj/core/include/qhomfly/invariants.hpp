#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qhomfly/braid.hpp"
#include "qhomfly/pbw.hpp"
#include "qhomfly/qfield.hpp"

namespace qhomfly {

// Weakly decreasing positive parts; the empty partition is the trivial color.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  static Partition column(int a);  // e_a = (1^a)
  static Partition row(int a);     // h_a = (a)

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int width() const { return parts_.empty() ? 0 : parts_.front(); }
  int size() const;
  int part(int i) const { return i < length() ? parts_[i] : 0; }
  Partition transpose() const;
  bool is_column() const { return width() <= 1; }
  bool is_row() const { return length() <= 1; }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

std::string to_string(const Partition& p);
// "e3", "h2", "p<2,1>" or "p2,1"
Partition parse_color(std::string_view text);

struct InvariantOptions {
  int jobs = 1;
  EvalOptions eval;
};

// W of the blackboard-framed closure with column colors e_{a_c}
XPoly w_columns(const ColoredBraid& cb, const InvariantOptions& opt = {});
// the same at x = q^n through the specialized recursion
RatQ w_columns_specialized(const ColoredBraid& cb, int n, const InvariantOptions& opt = {});
// colors read as rows h_{a_c}
XPoly w_rows(const ColoredBraid& cb, const InvariantOptions& opt = {});

// signed sum of column-colored invariants of a single braid
struct ColoringTerm {
  std::vector<int> colors;
  int sign = 1;
};
XPoly sum_columns(const Braid& b, const std::vector<ColoringTerm>& terms, const InvariantOptions& opt = {});

enum class JtRoute {
  // W(l) = bar(sum sgn W(e_{l_i + s(i) - i})), cable width = rows of l
  Transpose,
  // W(l) = sum sgn W(e_{l'_i + s(i) - i}) with l' the transpose, cable width = columns of l
  Direct,
  Auto,
};

// Arbitrary partition colors through Jacobi-Trudi and cabling. widths[c] overrides the
// cable width of component c when positive.
XPoly w_colored(const Braid& b, const std::vector<Partition>& colors, JtRoute route = JtRoute::Auto,
                const InvariantOptions& opt = {}, const std::vector<int>& widths = {});

// first component colored by lambda with l parallels, the rest by their column colors
XPoly w_partition(const ColoredBraid& cb, const Partition& lambda, int l, const InvariantOptions& opt = {});

enum class ColorKind { Column, Row };

// per-unit framing factor: W(closure of sigma_1 on 2 strands) / W(unknot)
XPoly framing_factor(int a, ColorKind kind = ColorKind::Column);
XPoly framing_factor(const Partition& lambda);
XPoly adjust_framing(const XPoly& v, int a, int delta, ColorKind kind = ColorKind::Column);
XPoly adjust_framing(const XPoly& v, const Partition& lambda, int delta);
// removes the blackboard self-framing of every component
XPoly to_zero_framing(const XPoly& v, const Braid& b, const std::vector<Partition>& colors);

struct InvariantResult {
  XPoly value;
  ColoredBraid braid;
  std::vector<Partition> colors;
  std::string framing;
};

// closed-form six-fold sum for the right-handed trefoil colored e_a
XPoly oracle_trefoil_sum(int a);
// closed form for T(2,s) colored h_m; blackboard framing, or 0-framed for odd s
XPoly oracle_torus(int s, int m, bool zero_framed);

}  // namespace qhomfly
