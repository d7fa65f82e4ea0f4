#include "ueaspin/rational.hpp"

#include <climits>
#include <ostream>
#include <stdexcept>

namespace ueaspin {

namespace {

mpz_class to_mpz(std::int64_t v) {
  // mpz_class has no int64 constructor on every platform; go through a string
  // only for values outside long range.
  if (v >= static_cast<std::int64_t>(LONG_MIN) && v <= static_cast<std::int64_t>(LONG_MAX)) {
    return mpz_class(static_cast<long>(v));
  }
  return mpz_class(std::to_string(v));
}

bool is_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace

Rational::Rational(std::int64_t value) : value_(to_mpz(value)) {}

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) throw std::domain_error("Rational: zero denominator");
  value_ = mpq_class(to_mpz(numerator), to_mpz(denominator));
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string_view num = text;
  std::string_view den;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
    if (!is_digits(den)) throw std::invalid_argument("Rational: malformed denominator in '" + std::string(text) + "'");
  }
  std::string_view digits = num;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (!is_digits(digits)) throw std::invalid_argument("Rational: malformed numerator in '" + std::string(text) + "'");

  mpz_class n(std::string(num.front() == '+' ? num.substr(1) : num));
  mpz_class d = den.empty() ? mpz_class(1) : mpz_class(std::string(den));
  if (d == 0) throw std::domain_error("Rational: zero denominator in '" + std::string(text) + "'");
  mpq_class q(n, d);
  q.canonicalize();
  return Rational(std::move(q));
}

bool Rational::is_integer() const { return value_.get_den() == 1; }

std::string Rational::numerator_string() const { return value_.get_num().get_str(); }
std::string Rational::denominator_string() const { return value_.get_den().get_str(); }

std::string Rational::to_fraction_string() const { return numerator_string() + "/" + denominator_string(); }

std::string Rational::to_string() const { return is_integer() ? numerator_string() : to_fraction_string(); }

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw std::domain_error("Rational: division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

std::size_t Rational::hash() const {
  std::size_t h = std::hash<std::string>{}(value_.get_num().get_str(16));
  h ^= std::hash<std::string>{}(value_.get_den().get_str(16)) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

Rational pow(Rational base, unsigned exponent) {
  Rational result(1);
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    base *= base;
    exponent >>= 1U;
  }
  return result;
}

}  // namespace ueaspin
