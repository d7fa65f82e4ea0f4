#include "ueaspin/polynomial.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace ueaspin {

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

Polynomial::Polynomial(std::initializer_list<Rational> coefficients) : coeffs_(coefficients) { trim(); }

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::x() { return Polynomial({Rational(0), Rational(1)}); }

Polynomial Polynomial::linear_root(const Rational& root) { return Polynomial({-root, Rational(1)}); }

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational Polynomial::coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

const Rational& Polynomial::leading() const {
  if (coeffs_.empty()) throw std::domain_error("Polynomial: zero polynomial has no leading coefficient");
  return coeffs_.back();
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  const Rational inv = Rational(1) / leading();
  return *this * inv;
}

Rational Polynomial::evaluate(const Rational& at) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= at;
    acc += *it;
  }
  return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& rhs) {
  if (rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= rhs;
  return *this;
}

Polynomial Polynomial::operator-() const { return *this * Rational(-1); }

std::string Polynomial::to_string(const std::string& variable) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = coeffs_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    Rational mag = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == Rational(1);
    if (i == 0 || !unit) os << mag;
    if (i > 0) {
      if (!unit) os << "*";
      os << variable;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

std::pair<Polynomial, Polynomial> divmod(const Polynomial& dividend, const Polynomial& divisor) {
  if (divisor.is_zero()) throw std::domain_error("Polynomial: division by zero polynomial");
  std::vector<Rational> rem = dividend.coefficients();
  const int dd = divisor.degree();
  const Rational inv_lead = Rational(1) / divisor.leading();
  const auto& dc = divisor.coefficients();
  if (dividend.degree() < dd) return {Polynomial(), dividend};
  std::vector<Rational> quot(static_cast<std::size_t>(dividend.degree() - dd + 1));
  for (int i = dividend.degree(); i >= dd; --i) {
    const Rational factor = rem[static_cast<std::size_t>(i)] * inv_lead;
    if (factor.is_zero()) continue;
    quot[static_cast<std::size_t>(i - dd)] = factor;
    for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(i - dd + j)] -= factor * dc[static_cast<std::size_t>(j)];
  }
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial operator%(const Polynomial& dividend, const Polynomial& divisor) { return divmod(dividend, divisor).second; }

Polynomial pow(const Polynomial& base, unsigned exponent) {
  Polynomial result = Polynomial::constant(Rational(1));
  Polynomial b = base;
  while (exponent > 0) {
    if (exponent & 1U) result *= b;
    b *= b;
    exponent >>= 1U;
  }
  return result;
}

Polynomial gcd(const Polynomial& p, const Polynomial& q) { return extended_gcd(p, q).g; }

BezoutResult extended_gcd(const Polynomial& p, const Polynomial& q) {
  if (p.is_zero() && q.is_zero()) throw std::domain_error("extended_gcd: both inputs are zero");

  // Invariant: r0 = s0*p + t0*q, r1 = s1*p + t1*q.
  Polynomial r0 = p, r1 = q;
  Polynomial s0 = Polynomial::constant(1), s1;
  Polynomial t0, t1 = Polynomial::constant(1);
  while (!r1.is_zero()) {
    auto [quot, rem] = divmod(r0, r1);
    r0 = std::exchange(r1, std::move(rem));
    s0 = std::exchange(s1, s0 - quot * s1);
    t0 = std::exchange(t1, t0 - quot * t1);
  }
  const Rational inv = Rational(1) / r0.leading();
  Polynomial g = r0 * inv;
  Polynomial a = s0 * inv;
  Polynomial b = t0 * inv;

  if (!q.is_zero()) {
    // Reduce a modulo q/g; b follows from b = (g - a*p)/q exactly.
    const Polynomial cofactor = divmod(q, g).first;
    a = a % cofactor;
    auto [bq, brem] = divmod(g - a * p, q);
    if (!brem.is_zero()) throw std::logic_error("extended_gcd: Bezout normalization left a remainder");
    b = std::move(bq);
  }
  return {std::move(g), std::move(a), std::move(b)};
}

}  // namespace ueaspin
