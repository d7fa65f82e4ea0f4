#include <doctest.h>

#include "support/generators.hpp"
#include "ueaspin/projector.hpp"
#include "ueaspin/uea.hpp"
#include "ueaspin/uea_json.hpp"

using namespace ueaspin;
using namespace ueaspin::uea;
using ueaspin::testing::random_axis;
using ueaspin::testing::random_element;
using ueaspin::testing::random_rational;
using ueaspin::testing::random_word;
using ueaspin::testing::uniform_int;

namespace {

Element J(Axis a) { return Element::generator(a); }
Element mono(std::uint32_t i, std::uint32_t j, std::uint32_t k, const Rational& c = Rational(1)) {
  return Element::monomial(Monomial{{i, j, k}}, c);
}
Element word(std::string_view s) { return normal_form(parse_word(s)); }

// F(J_b) X = sum_{c,a} eps_{bca} J_c X J_a
Element f_op(Axis b, const Element& x) {
  Element out;
  for (Axis c : kAxes) {
    for (Axis a : kAxes) {
      const int eps = structure_constant(b, c, a);
      if (eps != 0) out.add_scaled(right_mul(a, left_mul(c, x)), Rational(eps));
    }
  }
  return out;
}

}  // namespace

TEST_CASE("structure constants") {
  CHECK(structure_constant(Axis::x, Axis::y, Axis::z) == 1);
  CHECK(structure_constant(Axis::y, Axis::x, Axis::z) == -1);
  CHECK(structure_constant(Axis::x, Axis::x, Axis::z) == 0);
  for (Axis a : kAxes) {
    for (Axis b : kAxes) {
      for (Axis c : kAxes) {
        CHECK(structure_constant(a, b, c) == -structure_constant(b, a, c));
        CHECK(structure_constant(a, b, c) == -structure_constant(a, c, b));
      }
    }
  }
}

TEST_CASE("normal_form") {
  CHECK(word("xy") == mono(1, 1, 0));
  CHECK(word("yx") == mono(1, 1, 0) - mono(0, 0, 1));
  // zzx = xz^2 + 2yz - x, by moving x left with [z,x] = y and [z,y] = -x.
  CHECK(word("zzx") == mono(1, 0, 2) + mono(0, 1, 1, 2) - mono(1, 0, 0));
  CHECK(word("") == Element::scalar(1));
  CHECK(word("zzx").degree() == 3);
  CHECK_THROWS_AS(parse_word("xw"), std::invalid_argument);
}

TEST_CASE("normal_form confluence over random rewriting paths") {
  for (int trial = 0; trial < 120; ++trial) {
    const FreeWord w = random_word(uniform_int(0, 6));
    const Element nf = normal_form(w);
    CHECK(nf.degree() <= static_cast<int>(w.size()));
    if (w.size() < 2) continue;
    // Re-associate at a random split point.
    const auto split = static_cast<std::ptrdiff_t>(uniform_int(1, static_cast<int>(w.size()) - 1));
    const FreeWord left(w.begin(), w.begin() + split), right(w.begin() + split, w.end());
    CHECK(multiply(normal_form(left), normal_form(right)) == nf);
    // Swap one adjacent pair and restore it with the bracket term.
    const auto i = static_cast<std::size_t>(uniform_int(0, static_cast<int>(w.size()) - 2));
    FreeWord swapped = w;
    std::swap(swapped[i], swapped[i + 1]);
    Element rebuilt = normal_form(swapped);
    if (const Cross c = cross(w[i], w[i + 1]); c.sign != 0) {
      FreeWord contracted(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
      contracted.push_back(c.axis);
      contracted.insert(contracted.end(), w.begin() + static_cast<std::ptrdiff_t>(i) + 2, w.end());
      rebuilt.add_scaled(normal_form(contracted), Rational(c.sign));
    }
    CHECK(rebuilt == nf);
  }
}

TEST_CASE("multiply") {
  const Element a = random_element(3);
  CHECK(multiply(Element::scalar(1), a) == a);
  CHECK(multiply(a, Element::scalar(1)) == a);
  CHECK(commutator(J(Axis::x), J(Axis::y)) == J(Axis::z));
  CHECK(commutator(J(Axis::y), J(Axis::z)) == J(Axis::x));
  CHECK(commutator(J(Axis::z), J(Axis::x)) == J(Axis::y));
  for (Axis g : kAxes) CHECK(commutator(casimir(), J(g)).is_zero());

  for (int trial = 0; trial < 25; ++trial) {
    const Element p = random_element(2, 3), r = random_element(2, 3), s = random_element(2, 3);
    CHECK(multiply(multiply(p, r), s) == multiply(p, multiply(r, s)));
    CHECK(multiply(p, r + s) == multiply(p, r) + multiply(p, s));
  }
}

TEST_CASE("left and right multiplication") {
  CHECK(left_mul(J(Axis::x), Element::scalar(1)) == J(Axis::x));
  CHECK(left_mul(J(Axis::x), J(Axis::x)) == mono(2, 0, 0));
  CHECK(left_mul(casimir(), J(Axis::z)) == right_mul(casimir(), J(Axis::z)));
  CHECK(left_mul(casimir(), J(Axis::z)).degree() == 3);
  CHECK(right_mul(J(Axis::x), Element::scalar(1)) == J(Axis::x));
  CHECK(right_mul(J(Axis::y), J(Axis::x)) == multiply(J(Axis::x), J(Axis::y)));
  // (R_a R_b - R_b R_a)(1) = b a - a b = b x a
  for (Axis a : kAxes) {
    for (Axis b : kAxes) {
      const Element one = Element::scalar(1);
      const Element lhs = right_mul(a, right_mul(b, one)) - right_mul(b, right_mul(a, one));
      const Cross ba = cross(b, a);
      CHECK(lhs == J(ba.axis) * Rational(ba.sign));
    }
  }
}

TEST_CASE("adjoint action") {
  CHECK(adjoint(J(Axis::x), J(Axis::y)) == J(Axis::z));
  CHECK(adjoint(Element::scalar(Rational(3, 2)), J(Axis::y)) == J(Axis::y) * Rational(3, 2));
  CHECK(adjoint(casimir(), Element::scalar(1)).is_zero());
  for (Axis b : kAxes) CHECK(adjoint(casimir(), J(b)) == J(b) * Rational(-2));
  // ad_{ab} = ad_a o ad_b on a PBW monomial u = J_x J_z.
  const Element x = random_element(3);
  CHECK(adjoint(mono(1, 0, 1), x) == adjoint(Axis::x, adjoint(Axis::z, x)));
  // Degree filtration is preserved.
  for (int trial = 0; trial < 20; ++trial) {
    const Element e = random_element(4);
    CHECK(adjoint(random_element(2, 3), e).degree() <= e.degree());
  }
}

TEST_CASE("ad_v = L_v - R_v for degree-1 v") {
  for (int trial = 0; trial < 30; ++trial) {
    Element v;
    for (Axis a : kAxes) v.add_scaled(J(a), random_rational());
    const Element x = random_element(4);
    CHECK(adjoint(v, x) == left_mul(v, x) - right_mul(v, x));
  }
}

TEST_CASE("Jacobi consistency of ad") {
  for (int trial = 0; trial < 30; ++trial) {
    const Axis a = random_axis(), b = random_axis();
    const Element x = random_element(4);
    const Cross ab = cross(a, b);
    const Element lhs = ab.sign == 0 ? Element() : adjoint(ab.axis, x) * Rational(ab.sign);
    CHECK(lhs == adjoint(a, adjoint(b, x)) - adjoint(b, adjoint(a, x)));
  }
}

TEST_CASE("Casimir and E") {
  CHECK(casimir() == mono(2, 0, 0) + mono(0, 2, 0) + mono(0, 0, 2));
  CHECK(e_action(Element::scalar(1)).is_zero());
  CHECK(e_action(casimir()).is_zero());
  for (Axis b : kAxes) {
    CHECK(e_action(J(b)) == J(b) * Rational(-2));
    CHECK(e_factor(1, J(b)).is_zero());
    CHECK(e_factor(0, J(b)) == J(b) * Rational(-2));
    CHECK(e_factor(2, J(b)) == J(b) * Rational(4));
  }
  // Symmetric traceless quadratic: eigenvalue -6.
  const Element sym_xy = symmetrize(Monomial{{1, 1, 0}});
  CHECK(e_action(sym_xy) == sym_xy * Rational(-6));
  CHECK(e_factor(2, sym_xy).is_zero());
}

TEST_CASE("apply_poly with E on U") {
  auto e = [](const Element& x) { return e_action(x); };
  const Element jy = J(Axis::y);
  CHECK(apply_poly(Polynomial::constant(1), e, jy) == jy);
  CHECK(apply_poly(Polynomial::x(), e, jy) == jy * Rational(-2));
  CHECK(apply_poly(Polynomial::x() * (Polynomial::x() + Polynomial::constant(2)), e, jy).is_zero());
}

// Random-element identities for the operator algebra generated by E, L_a, R_a.
TEST_CASE("operator identities on random elements") {
  for (int trial = 0; trial < 25; ++trial) {
    const Element x = random_element(4);
    const Axis b = random_axis();
    auto E = [](const Element& y) { return e_action(y); };
    auto L = [b](const Element& y) { return left_mul(b, y); };
    auto R = [b](const Element& y) { return right_mul(b, y); };

    // E = 2 L_C - 2 sum L_a R_a
    CHECK(E(x) == e_action_via_left_right(x));
    // [E, L_b] = -2 F(J_b)
    CHECK(E(L(x)) - L(E(x)) == f_op(b, x) * Rational(-2));
    // [E, L_b] = [E, R_b]
    CHECK(E(L(x)) - L(E(x)) == E(R(x)) - R(E(x)));
    // [E, F(J_b)] = L_b E + E R_b
    CHECK(E(f_op(b, x)) - f_op(b, E(x)) == L(E(x)) + E(R(x)));
  }
}

TEST_CASE("left action identity [E,[E,[E,L_v]]] + 2[E^2, L_v] = 0") {
  auto E = [](const Element& y) { return e_action(y); };
  for (int trial = 0; trial < 20; ++trial) {
    const Element x = random_element(4);
    for (Axis v : kAxes) {
      auto L = [v](const Element& y) { return left_mul(v, y); };
      // Expanded: E^3 L - 3 E^2 L E + 3 E L E^2 - L E^3 + 2 E^2 L - 2 L E^2.
      const Element ex = E(x), eex = E(ex), eeex = E(eex);
      Element total = E(E(E(L(x))));
      total.add_scaled(E(E(L(ex))), Rational(-3));
      total.add_scaled(E(L(eex)), Rational(3));
      total.add_scaled(L(eeex), Rational(-1));
      total.add_scaled(E(E(L(x))), Rational(2));
      total.add_scaled(L(eex), Rational(-2));
      CHECK(total.is_zero());
    }
  }
}

TEST_CASE("mutual decomposition of E and tensor-order grading on order <= 2") {
  // Tensor order is graded through symmetrization, which intertwines the
  // adjoint action; PBW degree itself is not E-invariant.
  const MonomialIndex idx(2);
  std::vector<RationalVector> sym_columns;
  for (std::size_t i = 0; i < idx.size(); ++i) sym_columns.push_back(idx.coordinates(symmetrize(idx.monomial(i))));
  const RationalMatrix sym = RationalMatrix::from_columns(sym_columns, idx.size());
  const auto sym_inv = sym.inverse();
  REQUIRE(sym_inv.has_value());
  auto grade = [&](const Element& e) {
    RationalVector c = *sym_inv * idx.coordinates(e);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] *= Rational(idx.monomial(i).degree());
    return idx.element(sym * c);
  };

  const Polynomial x = Polynomial::x();
  auto lin = [&](std::int64_t r) { return Factor{Polynomial::linear_root(Rational(r)), 1}; };
  OperatorDecomposition<Element> e_dec{bezout_projectors(FactoredMinPoly({lin(0), lin(-2), lin(-6)})),
                                       [](const Element& e) { return e_action(e); }};
  OperatorDecomposition<Element> g_dec{bezout_projectors(FactoredMinPoly({lin(0), lin(1), lin(2)})), grade};
  std::vector<Element> span;
  for (std::size_t i = 0; i < idx.size(); ++i) span.push_back(Element::monomial(idx.monomial(i)));

  const auto cells = mutual_projectors<Element>({e_dec, g_dec}, span);
  REQUIRE(cells.size() == 9);
  // Expected image dimensions (E eigenvalue, order): scalars (0,0) = 1,
  // vectors (-2,1) = 3, Casimir (0,2) = 1, quadrupole (-6,2) = 5.
  const std::size_t expected[3][3] = {{1, 0, 1}, {0, 3, 0}, {0, 0, 5}};
  for (const auto& cell : cells) {
    std::vector<RationalVector> cols;
    for (const auto& im : cell.images) cols.push_back(idx.coordinates(im));
    const std::size_t rank = RationalMatrix::from_columns(cols, idx.size()).rank();
    CHECK(rank == expected[cell.indices[0]][cell.indices[1]]);
    CHECK(cell.trivial == (rank == 0));
  }
}

TEST_CASE("canonical JSON form") {
  const Element e = mono(0, 0, 1, Rational(-1, 3)) + mono(1, 1, 0) + Element::scalar(2);
  const auto j = to_json(e);
  CHECK(j.dump() == R"([{"c":"2/1","m":[0,0,0]},{"c":"-1/3","m":[0,0,1]},{"c":"1/1","m":[1,1,0]}])");
  CHECK(element_from_json(j) == e);
  for (int trial = 0; trial < 20; ++trial) {
    const Element r = random_element(5, 8);
    CHECK(element_from_json(nlohmann::json::parse(to_json(r).dump())) == r);
  }
  CHECK_THROWS_AS(element_from_json(nlohmann::json::parse(R"([{"m":[1,2],"c":"1"}])")), std::invalid_argument);
  CHECK_THROWS_AS(element_from_json(nlohmann::json::parse(R"({"m":[1,2,3]})")), std::invalid_argument);
}

TEST_CASE("text rendering") {
  CHECK(Element().to_string() == "0");
  CHECK((mono(2, 1, 0) - mono(0, 0, 1, Rational(1, 3)) + Element::scalar(1)).to_string() == "Jx^2*Jy - 1/3*Jz + 1");
  CHECK((mono(0, 0, 1, Rational(-1, 3))).to_latex() == "-\\frac{1}{3} J_z");
}

TEST_CASE("MonomialIndex") {
  const MonomialIndex idx(3);
  CHECK(idx.size() == 20);
  CHECK(pbw_dimension(8) == 165);
  CHECK(idx.degree_range(2) == std::pair<std::size_t, std::size_t>{4, 10});
  const Element e = random_element(3, 6);
  CHECK(idx.element(idx.coordinates(e)) == e);
  CHECK_THROWS_AS((void)idx.position(Monomial{{4, 0, 0}}), std::out_of_range);
}
