#include "qhomfly/expression.hpp"

#include <cctype>
#include <cstdlib>

namespace qhomfly {

OreTerms ore_multiply(const OreTerms& a, const OreTerms& b) {
  OreTerms out;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) {
      // M^k L^j M^k' L^j' = q^{j k'} M^{k+k'} L^{j+j'}
      XPoly c = ca * cb * RatQ(LaurentQ::q_power(ka.first * kb.second));
      auto& dst = out[{ka.first + kb.first, ka.second + kb.second}];
      dst += c;
    }
  for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

namespace {

OreTerms scalar(const XPoly& c) {
  OreTerms t;
  if (!c.is_zero()) t.emplace(std::pair{0, 0}, c);
  return t;
}

void add_into(OreTerms& a, const OreTerms& b, int sign) {
  for (const auto& [k, c] : b) {
    auto& dst = a[k];
    if (sign > 0) dst += c;
    else dst -= c;
  }
  for (auto it = a.begin(); it != a.end();) it = it->second.is_zero() ? a.erase(it) : std::next(it);
}

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  OreTerms parse() {
    OreTerms v = expr();
    skip();
    if (pos_ != s_.size()) throw ParseError("unexpected character '" + std::string(1, s_[pos_]) + "'", pos_);
    return v;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  OreTerms expr() {
    skip();
    OreTerms v;
    int sign = 1;
    if (eat('-')) sign = -1;
    else eat('+');
    add_into(v, term(), sign);
    for (;;) {
      if (eat('+')) add_into(v, term(), 1);
      else if (eat('-')) add_into(v, term(), -1);
      else return v;
    }
  }

  OreTerms term() {
    OreTerms v = factor();
    for (;;) {
      if (eat('*')) {
        v = ore_multiply(v, factor());
      } else if (eat('/')) {
        const std::size_t at = pos_;
        v = ore_multiply(v, inverse(factor(), at));
      } else {
        return v;
      }
    }
  }

  static OreTerms inverse(const OreTerms& d, std::size_t at) {
    if (d.size() != 1 || d.begin()->first != std::pair{0, 0})
      throw ParseError("division by an expression involving M or L", at);
    const XPoly& c = d.begin()->second;
    if (c.is_monomial()) return scalar(c.monomial_inverse());
    throw ParseError("division by a non-unit in x", at);
  }

  OreTerms factor() {
    skip();
    if (eat('-')) return ore_multiply(scalar(XPoly(-1)), factor());
    OreTerms base = atom();
    if (!eat('^')) return base;
    skip();
    const std::size_t at = pos_;
    const int e = integer_exponent();
    if (e >= 0) {
      OreTerms out = scalar(XPoly(1));
      for (int k = 0; k < e; ++k) out = ore_multiply(out, base);
      return out;
    }
    OreTerms inv = inverse(base, at);
    OreTerms out = scalar(XPoly(1));
    for (int k = 0; k < -e; ++k) out = ore_multiply(out, inv);
    return out;
  }

  int integer_exponent() {
    skip();
    bool paren = eat('(');
    skip();
    int sign = 1;
    if (eat('-')) sign = -1;
    else eat('+');
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected an integer exponent", pos_);
    const int v = std::atoi(std::string(s_.substr(start, pos_ - start)).c_str());
    if (paren && !eat(')')) throw ParseError("expected ')'", pos_);
    return sign * v;
  }

  OreTerms atom() {
    skip();
    if (pos_ >= s_.size()) throw ParseError("unexpected end of input", pos_);
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      OreTerms v = expr();
      if (!eat(')')) throw ParseError("expected ')'", pos_);
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      Integer v(std::string(s_.substr(start, pos_ - start)));
      return scalar(XPoly(LaurentQ(v)));
    }
    ++pos_;
    switch (c) {
      case 'q':
        return scalar(XPoly(LaurentQ::q_power(1)));
      case 'x':
        return scalar(XPoly::x_power(1));
      case 'M':
        return OreTerms{{{0, 1}, XPoly(1)}};
      case 'L':
        return OreTerms{{{1, 0}, XPoly(1)}};
      default:
        throw ParseError("unexpected character '" + std::string(1, c) + "'", pos_ - 1);
    }
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

OreTerms parse_ore(std::string_view text) { return Parser(text).parse(); }

XPoly parse_xpoly(std::string_view text) {
  OreTerms t = parse_ore(text);
  if (t.empty()) return XPoly();
  if (t.size() != 1 || t.begin()->first != std::pair{0, 0})
    throw ParseError("expression involves M or L", 0);
  return t.begin()->second;
}

}  // namespace qhomfly
