#pragma once

// Hand-rolled random generators for property tests. Fixed seeds keep failures
// reproducible.

#include <random>
#include <vector>

#include "ueaspin/polynomial.hpp"
#include "ueaspin/rational.hpp"
#include "ueaspin/uea.hpp"

namespace ueaspin::testing {

inline std::mt19937_64& rng() {
  static std::mt19937_64 engine(20240611);
  return engine;
}

inline int uniform_int(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

inline Rational random_rational(int max_num = 9, int max_den = 6) {
  return Rational(uniform_int(-max_num, max_num), uniform_int(1, max_den));
}

inline Rational random_nonzero_rational(int max_num = 9, int max_den = 6) {
  Rational r;
  do r = random_rational(max_num, max_den);
  while (r.is_zero());
  return r;
}

inline uea::Axis random_axis() { return static_cast<uea::Axis>(uniform_int(0, 2)); }

inline uea::FreeWord random_word(int length) {
  uea::FreeWord w;
  for (int i = 0; i < length; ++i) w.push_back(random_axis());
  return w;
}

/// Random PBW element with up to `terms` monomials of degree <= max_degree.
inline uea::Element random_element(unsigned max_degree, int terms = 5) {
  uea::Element e;
  for (int t = 0; t < terms; ++t) {
    const unsigned d = static_cast<unsigned>(uniform_int(0, static_cast<int>(max_degree)));
    uea::Monomial m;
    unsigned left = d;
    for (std::size_t a = 0; a < 2; ++a) {
      m.exponents[a] = static_cast<std::uint32_t>(uniform_int(0, static_cast<int>(left)));
      left -= m.exponents[a];
    }
    m.exponents[2] = left;
    e.add_term(m, random_rational());
  }
  return e;
}

}  // namespace ueaspin::testing
