#pragma once

#include <json.hpp>

#include "ueaspin/uea.hpp"

namespace ueaspin::uea {

/// Canonical form: [{"m": [ex, ey, ez], "c": "num/den"}, ...] sorted
/// lexicographically by exponent triple.
nlohmann::json to_json(const Element& e);
/// Inverse of to_json; throws std::invalid_argument on malformed input.
Element element_from_json(const nlohmann::json& j);

}  // namespace ueaspin::uea
