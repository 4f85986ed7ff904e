#include "qhomfly/braid.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace qhomfly {

Braid parse_braid(std::string_view text, int strands) {
  if (strands < 1) throw std::invalid_argument("strand count must be positive");
  Braid b;
  b.strands = strands;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == '\n' || text[i] == ','))
      ++i;
    if (i >= text.size()) break;
    std::size_t j = i;
    while (j < text.size() && text[j] != ' ' && text[j] != '\t' && text[j] != '\n' && text[j] != ',')
      ++j;
    std::string tok(text.substr(i, j - i));
    i = j;
    std::string_view digits = tok;
    if (!digits.empty() && digits.front() == '+') digits.remove_prefix(1);
    int v = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
    if (ec != std::errc() || ptr != digits.data() + digits.size())
      throw BraidParseError(tok, "not an integer");
    if (v == 0) throw BraidParseError(tok, "generator index 0");
    if (std::abs(v) >= strands)
      throw BraidParseError(tok, "generator index out of range for " + std::to_string(strands) +
                                     " strands");
    b.word.push_back(v);
  }
  return b;
}

std::string to_string(const Braid& b) {
  std::string s;
  for (int g : b.word) {
    if (!s.empty()) s += ' ';
    s += std::to_string(g);
  }
  return s;
}

Braid mirror(const Braid& b) {
  Braid r = b;
  for (int& g : r.word) g = -g;
  return r;
}

namespace {

// pos[k] = bottom position of the strand at position k after the whole braid
std::vector<int> top_positions(const Braid& b) {
  std::vector<int> pos(static_cast<std::size_t>(b.strands));
  std::iota(pos.begin(), pos.end(), 0);
  for (auto it = b.word.rbegin(); it != b.word.rend(); ++it) {
    const int i = std::abs(*it);
    std::swap(pos[i - 1], pos[i]);
  }
  return pos;
}

}  // namespace

std::vector<int> permutation(const Braid& b) {
  std::vector<int> pos = top_positions(b);
  std::vector<int> perm(pos.size());
  for (std::size_t k = 0; k < pos.size(); ++k) perm[pos[k]] = static_cast<int>(k);
  return perm;
}

ClosureInfo closure_info(const Braid& b) {
  ClosureInfo info;
  const auto m = static_cast<std::size_t>(b.strands);
  const std::vector<int> perm = permutation(b);
  info.component_of_strand.assign(m, -1);
  for (std::size_t p = 0; p < m; ++p) {
    if (info.component_of_strand[p] >= 0) continue;
    const int c = info.component_count++;
    info.strands_of_component.emplace_back();
    // top position k is closed onto bottom position k
    for (int x = static_cast<int>(p); info.component_of_strand[x] < 0; x = perm[x]) {
      info.component_of_strand[x] = c;
      info.strands_of_component.back().push_back(x);
    }
    std::sort(info.strands_of_component.back().begin(), info.strands_of_component.back().end());
  }
  const auto r = static_cast<std::size_t>(info.component_count);
  std::vector<std::vector<int>> twice(r, std::vector<int>(r, 0));
  std::vector<int> pos(m);
  std::iota(pos.begin(), pos.end(), 0);
  for (auto it = b.word.rbegin(); it != b.word.rend(); ++it) {
    const int i = std::abs(*it);
    const int eps = *it > 0 ? 1 : -1;
    const int c1 = info.component_of_strand[pos[i - 1]];
    const int c2 = info.component_of_strand[pos[i]];
    if (c1 == c2) {
      twice[c1][c1] += 2 * eps;
    } else {
      twice[c1][c2] += eps;
      twice[c2][c1] += eps;
    }
    std::swap(pos[i - 1], pos[i]);
  }
  info.linking.assign(r, std::vector<int>(r, 0));
  for (std::size_t x = 0; x < r; ++x)
    for (std::size_t y = 0; y < r; ++y) {
      if (twice[x][y] % 2 != 0) throw std::logic_error("odd crossing count between components");
      info.linking[x][y] = twice[x][y] / 2;
    }
  return info;
}

std::vector<int> ColoredBraid::strand_colors() const {
  const ClosureInfo info = closure_info(braid);
  std::vector<int> out;
  out.reserve(info.component_of_strand.size());
  for (int c : info.component_of_strand) out.push_back(colors.at(static_cast<std::size_t>(c)));
  return out;
}

ColoredBraid make_colored(Braid b, std::vector<int> colors) {
  const ClosureInfo info = closure_info(b);
  if (static_cast<int>(colors.size()) != info.component_count)
    throw std::invalid_argument("closure has " + std::to_string(info.component_count) +
                                " component(s) but " + std::to_string(colors.size()) +
                                " color(s) were given");
  return ColoredBraid{std::move(b), std::move(colors)};
}

Cable cable(const Braid& b, std::span<const int> widths) {
  const ClosureInfo info = closure_info(b);
  if (static_cast<int>(widths.size()) != info.component_count)
    throw std::invalid_argument("cable: one width per component required");
  for (int w : widths)
    if (w < 1) throw std::invalid_argument("cable: widths must be positive");
  const auto m = static_cast<std::size_t>(b.strands);
  auto width = [&](int strand) { return widths[info.component_of_strand[strand]]; };

  std::vector<int> bottom_offset(m);
  int total = 0;
  for (std::size_t p = 0; p < m; ++p) {
    bottom_offset[p] = total;
    total += width(static_cast<int>(p));
  }

  std::vector<int> pos(m);
  std::iota(pos.begin(), pos.end(), 0);
  std::vector<int> upward;  // letters of the cable from bottom to top
  for (auto it = b.word.rbegin(); it != b.word.rend(); ++it) {
    const int i = std::abs(*it);
    const int eps = *it > 0 ? 1 : -1;
    int o = 0;
    for (int k = 0; k < i - 1; ++k) o += width(pos[k]);
    const int wa = width(pos[i - 1]);
    const int wb = width(pos[i]);
    // push the left bundle through the right one, rightmost strand first
    for (int a = wa - 1; a >= 0; --a)
      for (int c = 0; c < wb; ++c) upward.push_back(eps * (o + a + c + 1));
    std::swap(pos[i - 1], pos[i]);
  }

  Cable out;
  out.braid.strands = total;
  out.braid.word.assign(upward.rbegin(), upward.rend());
  const ClosureInfo cinfo = closure_info(out.braid);
  out.copies.resize(static_cast<std::size_t>(info.component_count));
  for (int c = 0; c < info.component_count; ++c) {
    const int first = info.strands_of_component[c].front();
    for (int k = 0; k < widths[c]; ++k)
      out.copies[c].push_back(cinfo.component_of_strand[bottom_offset[first] + k]);
  }
  return out;
}

ColoredBraid cable_first_component(const ColoredBraid& cb, int l, std::span<const int> new_colors) {
  if (l < 1) throw std::invalid_argument("cable_first_component: l must be positive");
  if (static_cast<int>(new_colors.size()) != l)
    throw std::invalid_argument("cable_first_component: need one color per parallel");
  std::vector<int> widths(cb.colors.size(), 1);
  widths.at(0) = l;
  Cable c = cable(cb.braid, widths);
  std::vector<int> colors(cb.colors.size() + static_cast<std::size_t>(l) - 1, 0);
  for (int k = 0; k < l; ++k) colors[c.copies[0][k]] = new_colors[k];
  for (std::size_t comp = 1; comp < cb.colors.size(); ++comp) colors[c.copies[comp][0]] = cb.colors[comp];
  return ColoredBraid{std::move(c.braid), std::move(colors)};
}

}  // namespace qhomfly
