#pragma once

#include <initializer_list>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "ueaspin/rational.hpp"

namespace ueaspin {

/// Dense univariate polynomial over the rationals. Coefficients are stored
/// lowest degree first with no trailing zeros; the zero polynomial is empty.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);
  Polynomial(std::initializer_list<Rational> coefficients);

  static Polynomial constant(const Rational& c);
  static Polynomial x();
  /// x - root
  static Polynomial linear_root(const Rational& root);

  /// -1 for the zero polynomial.
  [[nodiscard]] int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
  [[nodiscard]] bool is_constant() const { return coeffs_.size() <= 1; }
  [[nodiscard]] const std::vector<Rational>& coefficients() const { return coeffs_; }
  /// Coefficient of x^i (zero beyond the degree).
  [[nodiscard]] Rational coefficient(std::size_t i) const;
  /// Throws std::domain_error for the zero polynomial.
  [[nodiscard]] const Rational& leading() const;

  [[nodiscard]] Polynomial monic() const;
  [[nodiscard]] Rational evaluate(const Rational& at) const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& rhs);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend Polynomial operator*(Polynomial a, const Rational& b) { return a *= b; }
  friend Polynomial operator*(const Rational& a, Polynomial b) { return b *= a; }
  Polynomial operator-() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  [[nodiscard]] std::string to_string(const std::string& variable = "x") const;
  friend std::ostream& operator<<(std::ostream& os, const Polynomial& p);

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Euclidean division; throws std::domain_error when the divisor is zero.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& dividend, const Polynomial& divisor);
Polynomial operator%(const Polynomial& dividend, const Polynomial& divisor);
Polynomial pow(const Polynomial& base, unsigned exponent);
/// Monic gcd; gcd(0, 0) throws std::domain_error.
Polynomial gcd(const Polynomial& p, const Polynomial& q);

struct BezoutResult {
  Polynomial g;  ///< monic gcd
  Polynomial a;
  Polynomial b;  ///< a*p + b*q == g
};

/// Extended Euclid, normalized so that g is monic and a is reduced modulo
/// q/g (a == 0 or deg a < deg q - deg g). Throws std::domain_error when both
/// inputs are zero.
BezoutResult extended_gcd(const Polynomial& p, const Polynomial& q);

}  // namespace ueaspin
