#include "qhomfly/json_io.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace qhomfly {

nlohmann::ordered_json to_json(const LaurentQ& p) {
  auto out = nlohmann::ordered_json::array();
  for (int e = p.low(); !p.is_zero() && e <= p.high(); ++e) {
    const Integer& c = p.dense()[e - p.low()];
    if (c != 0) out.push_back(nlohmann::ordered_json::array({e, c.get_str()}));
  }
  return out;
}

LaurentQ laurent_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("Laurent polynomial must be a JSON array");
  std::map<int, Integer> terms;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 2 || !t[0].is_number_integer() || !t[1].is_string())
      throw std::invalid_argument("Laurent term must be [exponent, \"coefficient\"]");
    Integer c;
    if (c.set_str(t[1].get<std::string>(), 10) != 0) throw std::invalid_argument("bad integer coefficient");
    terms[t[0].get<int>()] += c;
  }
  return LaurentQ::from_terms(terms);
}

nlohmann::ordered_json to_json(const XPoly& p) {
  nlohmann::ordered_json out = nlohmann::ordered_json::object();
  for (const auto& [k, c] : p.terms()) {
    nlohmann::ordered_json t;
    t["num"] = to_json(c.num());
    t["den"] = to_json(c.den());
    out[std::to_string(k)] = std::move(t);
  }
  return out;
}

XPoly xpoly_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw std::invalid_argument("XPoly must be a JSON object");
  XPoly out;
  for (const auto& [key, t] : j.items()) {
    std::size_t used = 0;
    const int k = std::stoi(key, &used);
    if (used != key.size()) throw std::invalid_argument("bad x exponent '" + key + "'");
    if (!t.contains("num") || !t.contains("den")) throw std::invalid_argument("coefficient needs num and den");
    out.add_term(k, RatQ(laurent_from_json(t["num"]), laurent_from_json(t["den"])));
  }
  return out;
}

nlohmann::ordered_json to_json(const ColoredBraid& cb) {
  nlohmann::ordered_json out;
  out["strands"] = cb.braid.strands;
  out["word"] = cb.braid.word;
  out["colors"] = cb.colors;
  return out;
}

ColoredBraid colored_braid_from_json(const nlohmann::json& j) {
  Braid b;
  b.strands = j.at("strands").get<int>();
  b.word = j.at("word").get<std::vector<int>>();
  parse_braid(to_string(b), b.strands);  // validates indices
  return make_colored(std::move(b), j.at("colors").get<std::vector<int>>());
}

}  // namespace qhomfly
