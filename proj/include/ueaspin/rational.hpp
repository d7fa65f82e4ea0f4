#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace ueaspin {

/// Arbitrary-precision exact fraction, always kept in lowest terms with a
/// positive denominator. Zero is 0/1.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value);  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t numerator, std::int64_t denominator);

  /// Parses "n", "-n" or "n/d" (d nonzero). Throws std::invalid_argument.
  static Rational parse(std::string_view text);

  [[nodiscard]] bool is_zero() const { return sgn(value_) == 0; }
  [[nodiscard]] bool is_integer() const;
  [[nodiscard]] int sign() const { return sgn(value_); }

  [[nodiscard]] std::string numerator_string() const;
  [[nodiscard]] std::string denominator_string() const;

  /// Canonical "num/den" form, denominator always written.
  [[nodiscard]] std::string to_fraction_string() const;
  /// Compact form: "n" when integral, otherwise "n/d".
  [[nodiscard]] std::string to_string() const;
  [[nodiscard]] double to_double() const { return value_.get_d(); }

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  /// Throws std::domain_error on division by zero.
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  [[nodiscard]] std::size_t hash() const;

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  explicit Rational(mpq_class value) : value_(std::move(value)) {}
  mpq_class value_{0};
};

Rational pow(Rational base, unsigned exponent);

}  // namespace ueaspin

template <>
struct std::hash<ueaspin::Rational> {
  std::size_t operator()(const ueaspin::Rational& r) const noexcept { return r.hash(); }
};
