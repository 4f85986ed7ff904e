#pragma once

#include <nlohmann/json.hpp>

#include "qhomfly/braid.hpp"
#include "qhomfly/qfield.hpp"

namespace qhomfly {

// [[exponent, "coefficient"], ...] in increasing exponent order
nlohmann::ordered_json to_json(const LaurentQ& p);
LaurentQ laurent_from_json(const nlohmann::json& j);

// {"<x-exp>": {"num": [...], "den": [...]}, ...} in increasing x-exponent order
nlohmann::ordered_json to_json(const XPoly& p);
XPoly xpoly_from_json(const nlohmann::json& j);

nlohmann::ordered_json to_json(const ColoredBraid& cb);
ColoredBraid colored_braid_from_json(const nlohmann::json& j);

}  // namespace qhomfly
