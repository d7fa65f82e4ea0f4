#include "ueaspin/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ueaspin::oracle {

namespace {

using Complex = std::complex<double>;

ComplexMatrix matrix_power(const ComplexMatrix& m, std::uint32_t n) {
  ComplexMatrix out = ComplexMatrix::Identity(m.rows(), m.cols());
  for (std::uint32_t i = 0; i < n; ++i) out = out * m;
  return out;
}

}  // namespace

GeneratorMatrices build_spin_matrices(unsigned two_s) {
  const Eigen::Index d = two_s + 1;
  const double s = two_s / 2.0;
  ComplexMatrix sz = ComplexMatrix::Zero(d, d);
  ComplexMatrix sp = ComplexMatrix::Zero(d, d);
  for (Eigen::Index r = 0; r < d; ++r) {
    const double m = s - static_cast<double>(r);
    sz(r, r) = m;
    // <m+1| S_+ |m> sits one row above |m>.
    if (r > 0) sp(r - 1, r) = std::sqrt(s * (s + 1) - m * (m + 1));
  }
  const ComplexMatrix sm = sp.adjoint();
  const ComplexMatrix sx = (sp + sm) / 2.0;
  const ComplexMatrix sy = (sp - sm) / Complex(0.0, 2.0);
  return {sx, sy, sz};
}

GeneratorMatrices to_real_convention(const GeneratorMatrices& s) {
  const Complex minus_i(0.0, -1.0);
  return {s[0] * minus_i, s[1] * minus_i, s[2] * minus_i};
}

Representation::Representation(const RepConfig& config) : config_(config) {
  generators_ = build_spin_matrices(config.two_s);
  if (config.convention == Convention::real) generators_ = to_real_convention(generators_);
}

ComplexMatrix Representation::evaluate(const Element& x) const {
  if (config_.convention != Convention::real) {
    throw std::invalid_argument("evaluate: U(so(3)) is represented in the real convention only");
  }
  const Eigen::Index d = dimension();
  ComplexMatrix out = ComplexMatrix::Zero(d, d);
  for (const auto& [m, c] : x.terms()) {
    const ComplexMatrix term = matrix_power(generators_[0], m[Axis::x]) * matrix_power(generators_[1], m[Axis::y]) *
                               matrix_power(generators_[2], m[Axis::z]);
    out += term * c.to_double();
  }
  return out;
}

ComplexMatrix evaluate(const Element& x, const RepConfig& rep) { return Representation(rep).evaluate(x); }

StructureReport compare_structure_constants(const spinalg::SpinAlgebraTable& table, double tol) {
  const Representation rep({table.two_s(), Convention::real});
  std::vector<ComplexMatrix> images;
  for (std::size_t i = 0; i < table.dimension(); ++i) images.push_back(rep.evaluate(table.basis_element(i)));
  StructureReport report;
  for (std::size_t i = 0; i < table.dimension(); ++i) {
    for (std::size_t j = 0; j < table.dimension(); ++j) {
      ComplexMatrix diff = images[i] * images[j];
      const RationalVector& p = table.product(i, j);
      for (std::size_t l = 0; l < p.size(); ++l) {
        if (!p[l].is_zero()) diff -= images[l] * p[l].to_double();
      }
      report.max_deviation = std::max(report.max_deviation, diff.norm());
      ++report.pairs;
    }
  }
  report.pass = report.max_deviation < tol;
  return report;
}

std::size_t image_rank(unsigned k, unsigned two_s, double threshold) {
  const Representation rep({two_s, Convention::real});
  const auto words = multipole::all_words(k);
  const Eigen::Index d = rep.dimension();
  ComplexMatrix columns(d * d, static_cast<Eigen::Index>(words.size()));
  for (std::size_t w = 0; w < words.size(); ++w) {
    const ComplexMatrix m = rep.evaluate(multipole::multipole(words[w]));
    Eigen::Map<const Eigen::VectorXcd> flat(m.data(), d * d);
    const double scale = std::max(1.0, flat.norm());
    columns.col(static_cast<Eigen::Index>(w)) = flat / scale;
  }
  const Eigen::JacobiSVD<ComplexMatrix> svd(columns);
  const auto& sv = svd.singularValues();
  return static_cast<std::size_t>(std::count_if(sv.data(), sv.data() + sv.size(), [&](double x) { return x > threshold; }));
}

double clifford_deviation() {
  const auto s = build_spin_matrices(1);
  const ComplexMatrix id = ComplexMatrix::Identity(2, 2);
  double worst = 0.0;
  for (std::size_t a = 0; a < 3; ++a) {
    for (std::size_t b = 0; b < 3; ++b) {
      const ComplexMatrix diff = s[a] * s[b] + s[b] * s[a] - (a == b ? 0.5 : 0.0) * id;
      worst = std::max(worst, diff.norm());
    }
  }
  return worst;
}

double kemmer_deviation() {
  const auto s = build_spin_matrices(2);
  double worst = 0.0;
  for (std::size_t a = 0; a < 3; ++a) {
    for (std::size_t b = 0; b < 3; ++b) {
      for (std::size_t c = 0; c < 3; ++c) {
        ComplexMatrix diff = s[a] * s[b] * s[c] + s[c] * s[b] * s[a];
        if (a == b) diff -= s[c];
        if (b == c) diff -= s[a];
        worst = std::max(worst, diff.norm());
      }
    }
  }
  return worst;
}

bool hermiticity_parity_check(unsigned two_s, unsigned n, double tol) {
  const Representation rep({two_s, Convention::real});
  const double sign = n % 2 == 0 ? 1.0 : -1.0;
  for (const auto& c : multipole::multipole_basis(n).components) {
    const ComplexMatrix m = rep.evaluate(c.expansion);
    if ((ComplexMatrix(m.adjoint()) - sign * m).norm() > tol) return false;
  }
  return true;
}

}  // namespace ueaspin::oracle
