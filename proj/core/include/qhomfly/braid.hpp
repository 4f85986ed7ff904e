#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qhomfly {

// Braid word on `strands` strands; value i is sigma_i, -i is its inverse.
// The last letter sits at the bottom, next to where the strands start.
struct Braid {
  int strands = 1;
  std::vector<int> word;

  friend bool operator==(const Braid&, const Braid&) = default;
};

class BraidParseError : public std::invalid_argument {
 public:
  BraidParseError(const std::string& token, const std::string& why)
      : std::invalid_argument("bad braid token '" + token + "': " + why), token_(token) {}
  const std::string& token() const { return token_; }

 private:
  std::string token_;
};

Braid parse_braid(std::string_view text, int strands);
std::string to_string(const Braid& b);
// negate every letter
Braid mirror(const Braid& b);
// perm[p] = top position reached by the strand starting at bottom position p (0-based)
std::vector<int> permutation(const Braid& b);

struct ClosureInfo {
  int component_count = 0;
  // bottom position (0-based) -> component id; components ordered by smallest strand
  std::vector<int> component_of_strand;
  std::vector<std::vector<int>> strands_of_component;
  // symmetric; diagonal is the blackboard self-framing (writhe of the component)
  std::vector<std::vector<int>> linking;
};

ClosureInfo closure_info(const Braid& b);

struct ColoredBraid {
  Braid braid;
  // column color a_c of every component, in component order
  std::vector<int> colors;

  // colors b_1..b_m of the bottom endpoints, left to right
  std::vector<int> strand_colors() const;
};

// checks that the color count matches the component count
ColoredBraid make_colored(Braid b, std::vector<int> colors);

struct Cable {
  Braid braid;
  // copies[c][k] = component id of the k-th parallel of original component c
  std::vector<std::vector<int>> copies;
};

// Replace every strand of component c by widths[c] parallel strands (blackboard framing).
Cable cable(const Braid& b, std::span<const int> widths);

ColoredBraid cable_first_component(const ColoredBraid& cb, int l, std::span<const int> new_colors);

}  // namespace qhomfly
