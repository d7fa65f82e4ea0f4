#pragma once

// Universal enveloping algebra of so(3) over the rationals, in the real
// convention [J_x, J_y] = J_z (cyclic). Elements are stored in the ordered
// PBW basis J_x^a J_y^b J_z^c.

#include <array>
#include <compare>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "ueaspin/rational.hpp"
#include "ueaspin/rational_matrix.hpp"

namespace ueaspin::uea {

enum class Axis : std::uint8_t { x = 0, y = 1, z = 2 };

inline constexpr std::array<Axis, 3> kAxes{Axis::x, Axis::y, Axis::z};

constexpr std::size_t index(Axis a) { return static_cast<std::size_t>(a); }
char axis_name(Axis a);
/// Accepts 'x'/'y'/'z' (also '1'/'2'/'3'); throws std::invalid_argument.
Axis axis_from_char(char c);

/// Levi-Civita symbol, with J_a x J_b = sum_c eps_abc J_c.
int structure_constant(Axis a, Axis b, Axis c);

struct Cross {
  int sign = 0;  ///< 0 when a == b
  Axis axis = Axis::x;
};
/// a x b as a signed generator.
Cross cross(Axis a, Axis b);

/// Exponent triple of an ordered PBW monomial.
struct Monomial {
  std::array<std::uint32_t, 3> exponents{};

  [[nodiscard]] unsigned degree() const { return exponents[0] + exponents[1] + exponents[2]; }
  [[nodiscard]] std::uint32_t operator[](Axis a) const { return exponents[index(a)]; }
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// An ordered list of generators, i.e. a pure k-adic tensor. Empty = scalar 1.
using FreeWord = std::vector<Axis>;

/// "xyz" -> {x, y, z}; throws std::invalid_argument on other characters.
FreeWord parse_word(std::string_view letters);
std::string word_string(const FreeWord& w);

class Element {
 public:
  using Terms = std::map<Monomial, Rational>;

  Element() = default;
  static Element scalar(const Rational& c);
  static Element generator(Axis a);
  static Element monomial(const Monomial& m, const Rational& c = Rational(1));

  [[nodiscard]] const Terms& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] std::size_t size() const { return terms_.size(); }
  /// Largest monomial degree; -1 for zero.
  [[nodiscard]] int degree() const;
  [[nodiscard]] Rational coefficient(const Monomial& m) const;
  /// Terms of exactly this degree.
  [[nodiscard]] Element homogeneous_part(unsigned d) const;

  void add_term(const Monomial& m, const Rational& c);
  /// this += c * other
  void add_scaled(const Element& other, const Rational& c);

  Element& operator+=(const Element& rhs);
  Element& operator-=(const Element& rhs);
  Element& operator*=(const Rational& rhs);

  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(Element a, const Rational& c) { return a *= c; }
  friend Element operator*(const Rational& c, Element a) { return a *= c; }
  Element operator-() const;
  friend Element operator*(const Element& a, const Element& b);

  friend bool operator==(const Element&, const Element&) = default;

  /// e.g. "Jx^2*Jy - 1/3*Jz + 1"; highest degree first.
  [[nodiscard]] std::string to_string() const;
  [[nodiscard]] std::string to_latex() const;
  friend std::ostream& operator<<(std::ostream& os, const Element& e);

 private:
  Terms terms_;
};

Element multiply(const Element& a, const Element& b);
Element commutator(const Element& a, const Element& b);
Element power(const Element& a, unsigned n);

/// PBW representative of the product of the word's generators.
Element normal_form(const FreeWord& w);

/// L_v(A) = v A
Element left_mul(const Element& v, const Element& a);
/// R_v(A) = A v
Element right_mul(const Element& v, const Element& a);
Element left_mul(Axis g, const Element& a);
Element right_mul(Axis g, const Element& a);

/// ad_g(A) = g A - A g for a generator.
Element adjoint(Axis g, const Element& a);
/// ad_u extended from generators multiplicatively: ad_{ab} = ad_a o ad_b, and
/// linearly over PBW monomials. Note that ad_u is not A -> [u, A] unless u is
/// of degree <= 1.
Element adjoint(const Element& u, const Element& a);

/// C = J_x^2 + J_y^2 + J_z^2
const Element& casimir();

/// E = ad_C = sum_a ad_a o ad_a
Element e_action(const Element& a);
/// The same operator evaluated as 2 L_C - 2 sum_a L_a o R_a.
Element e_action_via_left_right(const Element& a);
/// E_k = E + k(k+1) id
Element e_factor(unsigned k, const Element& a);

/// Average of the normal forms of all orderings of the monomial's letters.
Element symmetrize(const Monomial& m);

/// Dense coordinates for the PBW monomials of degree <= max_degree, in
/// graded order (degree ascending, then exponent triple descending).
class MonomialIndex {
 public:
  explicit MonomialIndex(unsigned max_degree);

  [[nodiscard]] unsigned max_degree() const { return max_degree_; }
  [[nodiscard]] std::size_t size() const { return monomials_.size(); }
  [[nodiscard]] const Monomial& monomial(std::size_t i) const { return monomials_[i]; }
  /// Throws std::out_of_range for monomials above the cap.
  [[nodiscard]] std::size_t position(const Monomial& m) const;
  /// Index range [begin, end) of the monomials of exactly degree d.
  [[nodiscard]] std::pair<std::size_t, std::size_t> degree_range(unsigned d) const;

  [[nodiscard]] RationalVector coordinates(const Element& e) const;
  [[nodiscard]] Element element(const RationalVector& v) const;

 private:
  unsigned max_degree_;
  std::vector<Monomial> monomials_;
  std::map<Monomial, std::size_t> positions_;
};

/// Number of PBW monomials of degree <= n, C(n+3, 3).
std::size_t pbw_dimension(unsigned n);

}  // namespace ueaspin::uea
