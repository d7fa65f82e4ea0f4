#include "ueaspin/uea_json.hpp"

#include <stdexcept>

namespace ueaspin::uea {

nlohmann::json to_json(const Element& e) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [m, c] : e.terms()) {
    out.push_back({{"m", {m.exponents[0], m.exponents[1], m.exponents[2]}}, {"c", c.to_fraction_string()}});
  }
  return out;
}

Element element_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("element_from_json: expected an array");
  Element e;
  for (const auto& term : j) {
    if (!term.is_object() || !term.contains("m") || !term.contains("c")) {
      throw std::invalid_argument("element_from_json: term needs \"m\" and \"c\"");
    }
    const auto& m = term.at("m");
    if (!m.is_array() || m.size() != 3) throw std::invalid_argument("element_from_json: \"m\" must have 3 exponents");
    Monomial mono;
    for (std::size_t i = 0; i < 3; ++i) {
      if (!m[i].is_number_unsigned()) throw std::invalid_argument("element_from_json: exponents must be non-negative");
      mono.exponents[i] = m[i].get<std::uint32_t>();
    }
    if (!term.at("c").is_string()) throw std::invalid_argument("element_from_json: \"c\" must be a string");
    e.add_term(mono, Rational::parse(term.at("c").get<std::string>()));
  }
  return e;
}

}  // namespace ueaspin::uea
