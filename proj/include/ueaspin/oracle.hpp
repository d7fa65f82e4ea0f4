#pragma once

// Floating-point cross-checks against the standard spin-s matrices.

#include <array>
#include <complex>
#include <cstddef>

#include <Eigen/Dense>

#include "ueaspin/spinalg.hpp"

namespace ueaspin::oracle {

using uea::Axis;
using uea::Element;
using ComplexMatrix = Eigen::MatrixXcd;
using GeneratorMatrices = std::array<ComplexMatrix, 3>;

enum class Convention { physics, real };

struct RepConfig {
  unsigned two_s = 0;
  Convention convention = Convention::real;
};

/// Condon-Shortley spin matrices S_a in the basis m = s, s-1, ..., -s, with
/// [S_x, S_y] = i S_z.
GeneratorMatrices build_spin_matrices(unsigned two_s);
/// J_a = -i S_a, so that [J_x, J_y] = J_z.
GeneratorMatrices to_real_convention(const GeneratorMatrices& s);

class Representation {
 public:
  explicit Representation(const RepConfig& config);

  [[nodiscard]] const RepConfig& config() const { return config_; }
  [[nodiscard]] Eigen::Index dimension() const { return config_.two_s + 1; }
  [[nodiscard]] const ComplexMatrix& generator(Axis a) const { return generators_[uea::index(a)]; }
  /// Image of X. Only the real convention represents U; the physics
  /// convention throws std::invalid_argument.
  [[nodiscard]] ComplexMatrix evaluate(const Element& x) const;

 private:
  RepConfig config_;
  GeneratorMatrices generators_;
};

ComplexMatrix evaluate(const Element& x, const RepConfig& rep);

struct StructureReport {
  bool pass = true;
  double max_deviation = 0.0;
  std::size_t pairs = 0;
};

/// || rho(e_i) rho(e_j) - sum_l c_ij^l rho(e_l) ||_F over every basis pair.
StructureReport compare_structure_constants(const spinalg::SpinAlgebraTable& table, double tol = 1e-10);

/// Complex rank of span{rho(T_k(w))} with columns normalized, counting
/// singular values above the threshold.
std::size_t image_rank(unsigned k, unsigned two_s, double threshold = 1e-8);

/// max || S_a S_b + S_b S_a - (1/2) delta_ab ||_F for spin-1/2.
double clifford_deviation();
/// max || S_a S_b S_c + S_c S_b S_a - delta_ab S_c - delta_bc S_a ||_F for spin-1.
double kemmer_deviation();

/// rho(T_n(c))^dagger = (-1)^n rho(T_n(c)) for every component; optional
/// check, not a gate.
bool hermiticity_parity_check(unsigned two_s, unsigned n, double tol = 1e-10);

}  // namespace ueaspin::oracle
