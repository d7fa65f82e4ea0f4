#pragma once

// Step operators on E_k-annihilated subspaces of U(so(3)) and the multipole
// maps T_k built from them.
//
// On Im T_k the operator E satisfies the cubic
//   (E + (k-1)k)(E + k(k+1))(E + (k+1)(k+2)) L_v = 0,
// and the Bezout projectors of that cubic, applied after L_v, split L_v T_k
// into a step down, a step level and a step up. For k = 0 the cubic
// degenerates to E^2 (E + 2).

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "ueaspin/polynomial.hpp"
#include "ueaspin/projector.hpp"
#include "ueaspin/uea.hpp"

namespace ueaspin::multipole {

using uea::Axis;
using uea::Element;
using uea::FreeWord;

enum class StepKind { down, level, up };

std::string step_name(StepKind kind);

/// Raised when a step operator is applied to an element that is not
/// annihilated by the declared E_k.
class LevelMismatchError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The factored annihilating polynomial of E on L_v(Im T_k), in the order
/// down, level, up (level, up for k = 0).
FactoredMinPoly step_min_poly(unsigned k);
/// Projector polynomial in E for the given step; zero for a step down at k = 0.
Polynomial step_polynomial(StepKind kind, unsigned k);

/// Step operator P(E) L_v applied to X, where E_k X = 0 is required.
Element step(StepKind kind, Axis v, unsigned k, const Element& x);
/// The same projector composed with R_v instead of L_v.
Element step_right(StepKind kind, Axis v, unsigned k, const Element& x);

/// T_k(w) with k = len(w): T_0 = 1, T_{k+1}(v w) = S+_v T_k(w).
/// Expansions are memoized; the cache is safe for concurrent use.
const Element& multipole(const FreeWord& w);
/// Throws std::domain_error when len(w) != k.
const Element& multipole(unsigned k, const FreeWord& w);

/// A formal linear combination of k-adic words.
using Tensor = std::map<FreeWord, Rational>;

void add_word(Tensor& t, const FreeWord& w, const Rational& c);
/// Linear extension of T_k; all words must share one length.
Element multipole(const Tensor& t);
/// ad_g acting on tensor slots as a derivation.
Tensor tensor_adjoint(Axis g, const Tensor& t);
/// ad_u for u in U, multiplicative over PBW monomials as in uea::adjoint.
Tensor tensor_adjoint(const Element& u, const Tensor& t);

struct MultipoleComponent {
  unsigned level = 0;
  FreeWord indices;  ///< sorted x <= y <= z
  Element expansion;
};

struct MultipoleBasis {
  unsigned level = 0;
  std::vector<MultipoleComponent> components;  ///< 2k+1 entries
};

/// Index multisets of size k in lexicographic order.
std::vector<FreeWord> sorted_words(unsigned k);
/// All 3^k words of length k, lexicographic.
std::vector<FreeWord> all_words(unsigned k);

/// Greedy selection of independent components over sorted_words(k).
const MultipoleBasis& multipole_basis(unsigned k);

/// Exact rank of the span of all T_k(w).
std::size_t image_rank(unsigned k);

// Right-hand sides of the step-image formulas.

/// L((4C + (k-1)(k+1)) / (4(4k^2-1))) applied to
/// sum_p [(2k-1) delta_{a b_p} T_{k-1}(w\p) - sum_{q!=p} delta_{b_p b_q} T_{k-1}(a, w\{p,q})].
Element step_down_image(Axis a, const FreeWord& w);
/// (1/2) sum_p sum_c eps_{a b_p c} T_k(w with b_p -> c)
Element step_level_image(Axis a, const FreeWord& w);

// Checks. Each returns false on mismatch.

/// Defined for k >= 1; at k = 1 this is the dipole case C/3 delta_ab.
bool verify_step_down_image(unsigned k, Axis a, const FreeWord& w);
bool verify_step_level_image(unsigned k, Axis a, const FreeWord& w);
/// D^R = D, S+^R = S+ and Lambda^R = -Lambda on T_k(w).
bool verify_right_step_identities(unsigned k, Axis v, const FreeWord& w);
/// ad_u T_k(w) = T_k(ad_u w).
bool ad_commutation_check(unsigned k, const Element& u, const FreeWord& w);

bool annihilation_holds(const FreeWord& w);
/// T_k(w) is unchanged by every permutation of w.
bool totally_symmetric(const FreeWord& w);
/// sum_a T_k(w with a in slots p and q) = 0; w supplies the other k-2 slots
/// in order.
bool contraction_vanishes(const FreeWord& rest, std::size_t p, std::size_t q);
/// L_v T_k(w) = (D_v + Lambda_v + S+_v) T_k(w).
bool step_resolution_holds(Axis v, const FreeWord& w);

/// The cubic (x + m(m+1))(x + (m+1)(m+2))(x + (m-1)m).
Polynomial cubic_polynomial(unsigned m);
/// The cubic in E annihilates L_v T_m(w).
bool cubic_annihilates(unsigned m, Axis v, const FreeWord& w);
/// No product of two of the three factors annihilates all of L_v(Im T_m);
/// a witness is searched over generators and sorted index words. m >= 1.
bool cubic_is_minimal(unsigned m);

}  // namespace ueaspin::multipole
