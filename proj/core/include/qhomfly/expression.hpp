#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include "qhomfly/qfield.hpp"

namespace qhomfly {

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t pos)
      : std::invalid_argument(what + " at offset " + std::to_string(pos)), pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

// Element sum c_{j,k}(q, x) M^k L^j of the quantum Weyl algebra, L M = q M L.
// Keys are (j, k).
using OreTerms = std::map<std::pair<int, int>, XPoly>;

OreTerms ore_multiply(const OreTerms& a, const OreTerms& b);

// Integers, q, x, M, L, + - * / ^ and parentheses. Division only by units or
// x-free elements of Q(q).
OreTerms parse_ore(std::string_view text);
XPoly parse_xpoly(std::string_view text);

}  // namespace qhomfly
