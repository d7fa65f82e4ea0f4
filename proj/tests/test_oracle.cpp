#include <doctest.h>

#include "support/generators.hpp"
#include "ueaspin/oracle.hpp"

namespace uea = ueaspin::uea;
using namespace ueaspin::oracle;
using uea::kAxes;

namespace {

using Complex = std::complex<double>;

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) { return a * b - b * a; }

}  // namespace

TEST_CASE("spin matrices in the physics convention") {
  const auto pauli = build_spin_matrices(1);
  ComplexMatrix sx(2, 2), sy(2, 2), sz(2, 2);
  sx << 0, 0.5, 0.5, 0;
  sy << 0, Complex(0, -0.5), Complex(0, 0.5), 0;
  sz << 0.5, 0, 0, -0.5;
  CHECK((pauli[0] - sx).norm() < 1e-15);
  CHECK((pauli[1] - sy).norm() < 1e-15);
  CHECK((pauli[2] - sz).norm() < 1e-15);

  const auto zero = build_spin_matrices(0);
  for (const auto& m : zero) CHECK(m.norm() == 0.0);

  for (unsigned two_s = 0; two_s <= 6; ++two_s) {
    const auto s = build_spin_matrices(two_s);
    const double j = two_s / 2.0;
    const Complex i(0, 1);
    CHECK((commutator(s[0], s[1]) - i * s[2]).norm() < 1e-12);
    CHECK((commutator(s[1], s[2]) - i * s[0]).norm() < 1e-12);
    CHECK((commutator(s[2], s[0]) - i * s[1]).norm() < 1e-12);
    const ComplexMatrix cas = s[0] * s[0] + s[1] * s[1] + s[2] * s[2];
    CHECK((cas - j * (j + 1) * ComplexMatrix::Identity(two_s + 1, two_s + 1)).norm() < 1e-12);
  }
}

TEST_CASE("real convention") {
  for (unsigned two_s = 0; two_s <= 6; ++two_s) {
    const auto j = to_real_convention(build_spin_matrices(two_s));
    CHECK((commutator(j[0], j[1]) - j[2]).norm() < 1e-12);
    CHECK((commutator(j[1], j[2]) - j[0]).norm() < 1e-12);
    const ComplexMatrix cas = j[0] * j[0] + j[1] * j[1] + j[2] * j[2];
    const double k = two_s;
    CHECK((cas + k * (k + 2) / 4 * ComplexMatrix::Identity(two_s + 1, two_s + 1)).norm() < 1e-12);
  }
}

TEST_CASE("evaluate") {
  const Representation half({1, Convention::real});
  CHECK((half.evaluate(Element::scalar(1)) - ComplexMatrix::Identity(2, 2)).norm() < 1e-15);
  CHECK((half.evaluate(uea::casimir()) + 0.75 * ComplexMatrix::Identity(2, 2)).norm() < 1e-12);
  for (const auto& c : ueaspin::multipole::multipole_basis(2).components) CHECK(half.evaluate(c.expansion).norm() < 1e-10);
  CHECK_THROWS_AS(evaluate(Element::scalar(1), {1, Convention::physics}), std::invalid_argument);

  // The PBW form of J_z J_z J_x agrees with the plain matrix product.
  const Representation rep({3, Convention::real});
  const ComplexMatrix direct = rep.generator(Axis::z) * rep.generator(Axis::z) * rep.generator(Axis::x);
  CHECK((rep.evaluate(uea::normal_form(uea::parse_word("zzx"))) - direct).norm() < 1e-12);

  for (int trial = 0; trial < 20; ++trial) {
    const Element a = ueaspin::testing::random_element(2, 4), b = ueaspin::testing::random_element(2, 4);
    const Representation r({static_cast<unsigned>(ueaspin::testing::uniform_int(1, 4)), Convention::real});
    CHECK((r.evaluate(uea::multiply(a, b)) - r.evaluate(a) * r.evaluate(b)).norm() < 1e-10);
    CHECK((r.evaluate(a + b) - r.evaluate(a) - r.evaluate(b)).norm() < 1e-10);
  }
}

TEST_CASE("structure constants agree with matrices") {
  for (unsigned two_s = 0; two_s <= 4; ++two_s) {
    CAPTURE(two_s);
    const StructureReport report = compare_structure_constants(ueaspin::spinalg::spin_algebra(two_s));
    CHECK(report.pass);
    CHECK(report.max_deviation < 1e-10);
    CHECK(report.pairs == (two_s + 1) * (two_s + 1) * (two_s + 1) * (two_s + 1));
  }
}

TEST_CASE("matrix rank of multipole images") {
  for (unsigned two_s = 0; two_s <= 3; ++two_s) {
    for (unsigned k = 0; k <= two_s; ++k) CHECK(image_rank(k, two_s) == 2 * k + 1);
    CHECK(image_rank(two_s + 1, two_s) == 0);
  }
}

TEST_CASE("Clifford and Kemmer in the physics convention") {
  CHECK(clifford_deviation() < 1e-10);
  CHECK(kemmer_deviation() < 1e-10);
}

TEST_CASE("hermiticity parity") {
  for (unsigned n = 0; n <= 3; ++n) CHECK(hermiticity_parity_check(3, n));
}
