#pragma once

// Finite spin-s algebras S_s = U(so(3)) / <Im T_{2s+1}>.
//
// Every element of U is a unique combination of C^m T_n(component); the
// reduction below computes that expansion by peeling off the top degree. In
// S_s the Casimir becomes the scalar -k(k+2)/4 (k = 2s) and every T_n with
// n > k vanishes, which leaves the (2s+1)^2 elements T_n(component), n <= k.

#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include <json.hpp>

#include "ueaspin/multipole.hpp"
#include "ueaspin/rational_matrix.hpp"

namespace ueaspin::spinalg {

using uea::Axis;
using uea::Element;

struct CentralEntry {
  unsigned casimir_power = 0;  ///< m
  unsigned level = 0;          ///< n
  std::size_t component = 0;   ///< index into multipole_basis(n)
  friend auto operator<=>(const CentralEntry&, const CentralEntry&) = default;
};

using CentralCoefficients = std::map<CentralEntry, Rational>;

/// C^m T_n(component).
Element central_expansion(const CentralEntry& e);

/// The entries with 2m + n <= N and their change of basis from PBW
/// coordinates. Instances are shared and grow on demand; safe for
/// concurrent use.
class CentralMultipoleBasis {
 public:
  static CentralMultipoleBasis& shared();

  /// Entries with 2m + n <= cap, graded by 2m + n, then n, then component.
  std::vector<CentralEntry> entries(unsigned cap);
  /// Exact expansion of X; throws std::logic_error if a degree sector is
  /// singular.
  CentralCoefficients reduce(const Element& x);
  /// Makes every sector up to the given degree available.
  void prepare(unsigned degree);

 private:
  struct Sector {
    std::vector<CentralEntry> entries;
    std::vector<Element> expansions;
    uea::MonomialIndex index{0};
    std::pair<std::size_t, std::size_t> range;  ///< degree-d slice of index
    RationalMatrix inverse;                      ///< leading parts -> coefficients
  };
  const Sector& sector(unsigned d);
  std::mutex mutex_;
  std::map<unsigned, std::unique_ptr<Sector>> sectors_;
};

/// Convenience wrapper over the shared basis.
CentralCoefficients central_multipole_reduce(const Element& x);
Element reconstruct(const CentralCoefficients& c);

/// Basis label of S_s: T_n(component) with n <= 2s; flat index n^2 + component.
struct SpinBasisLabel {
  unsigned level = 0;
  std::size_t component = 0;
  friend bool operator==(const SpinBasisLabel&, const SpinBasisLabel&) = default;
};

std::size_t flat_index(unsigned level, std::size_t component);
std::string basis_label_string(const SpinBasisLabel& b);

/// The quotient map U -> S_s, as coordinates over the (2s+1)^2 basis.
class QuotientMap {
 public:
  explicit QuotientMap(unsigned two_s);

  [[nodiscard]] unsigned two_s() const { return two_s_; }
  [[nodiscard]] std::size_t dimension() const { return (two_s_ + 1) * (two_s_ + 1); }
  /// -k(k+2)/4
  [[nodiscard]] Rational casimir_scalar() const;
  [[nodiscard]] RationalVector apply(const CentralCoefficients& c) const;
  [[nodiscard]] RationalVector reduce(const Element& x) const;

 private:
  unsigned two_s_;
};

struct StructureConstant {
  std::size_t i = 0, j = 0, l = 0;
  Rational c;
  friend bool operator==(const StructureConstant&, const StructureConstant&) = default;
};

class SpinAlgebraTable {
 public:
  SpinAlgebraTable(unsigned two_s, std::vector<RationalVector> products);

  [[nodiscard]] unsigned two_s() const { return two_s_; }
  [[nodiscard]] std::size_t dimension() const { return basis_.size(); }
  [[nodiscard]] const std::vector<SpinBasisLabel>& basis() const { return basis_; }
  /// Expansion in U of basis element i.
  [[nodiscard]] Element basis_element(std::size_t i) const;
  /// Coordinates of e_i e_j.
  [[nodiscard]] const RationalVector& product(std::size_t i, std::size_t j) const {
    return products_[i * basis_.size() + j];
  }
  /// Nonzero c_{ij}^l sorted by (i, j, l).
  [[nodiscard]] std::vector<StructureConstant> constants() const;

  [[nodiscard]] RationalVector unit(std::size_t i) const;
  [[nodiscard]] RationalVector multiply(const RationalVector& a, const RationalVector& b) const;
  /// Coordinates of T_1(a).
  [[nodiscard]] RationalVector generator(Axis a) const;

  friend bool operator==(const SpinAlgebraTable& a, const SpinAlgebraTable& b) {
    return a.two_s_ == b.two_s_ && a.products_ == b.products_;
  }

 private:
  unsigned two_s_;
  std::vector<SpinBasisLabel> basis_;
  std::vector<RationalVector> products_;
};

inline constexpr unsigned kDefaultTwoSCap = 8;

/// Throws std::domain_error when two_s exceeds the cap.
SpinAlgebraTable build_spin_algebra(unsigned two_s, unsigned cap = kDefaultTwoSCap);
/// Cached build_spin_algebra with the default cap.
const SpinAlgebraTable& spin_algebra(unsigned two_s);

nlohmann::json to_json(const SpinAlgebraTable& t);
/// Throws std::invalid_argument on malformed input.
SpinAlgebraTable spin_table_from_json(const nlohmann::json& j);

// Checks on S_s, k = 2s.

bool casimir_scalar_check(unsigned two_s);
bool eigenspectrum_check(unsigned two_s, Axis a);
bool top_multipole_vanishes(unsigned two_s);
/// (4C + k(k+2)) T_k(component) vanishes in S_{k/2}.
bool casimir_factor_identity_check(unsigned k);
/// D_a S+_b T_k(w) vanishes in S_{k/2}, for every sorted word w.
bool stepdown_stepup_vanishes(unsigned two_s, Axis a, Axis b);
bool identity_element_check(const SpinAlgebraTable& t);
bool associative(const SpinAlgebraTable& t, std::size_t i, std::size_t j, std::size_t l);
/// [T_1(a), T_1(b)] = sum_c eps_abc T_1(c); vacuous for s = 0.
bool commutator_closure_check(const SpinAlgebraTable& t);
/// Exact rank of the images of the basis elements under the quotient map.
std::size_t quotient_rank(unsigned two_s);
/// s = 1/2: J_a J_b + J_b J_a = -(1/2) delta_ab.
bool clifford_check(const SpinAlgebraTable& t);
/// s = 1: J_a J_b J_c + J_c J_b J_a = -(delta_ab J_c + delta_bc J_a).
bool kemmer_check(const SpinAlgebraTable& t);

}  // namespace ueaspin::spinalg
