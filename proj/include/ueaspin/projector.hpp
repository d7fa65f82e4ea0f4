#pragma once

// Spectral projectors built from a factored minimal polynomial, without
// eigenvectors: for each coprime factor f_j^{d_j} of m, the Bezout identity
// a*p + b*q = 1 (p = f_j^{d_j}, q = m/p) yields Pi_j = b*q, and the family
// {Pi_j(A)} resolves the identity orthogonally for any A with m(A) = 0.

#include <concepts>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <vector>

#include "ueaspin/polynomial.hpp"

namespace ueaspin {

struct Factor {
  Polynomial irreducible;  ///< stored monic, nonconstant
  unsigned multiplicity = 1;
};

/// A monic polynomial supplied in factored form. No factorization is done
/// here; the caller provides the factors and the constructor checks that they
/// are nonconstant and pairwise coprime (std::domain_error otherwise).
class FactoredMinPoly {
 public:
  FactoredMinPoly() = default;
  explicit FactoredMinPoly(std::vector<Factor> factors);

  [[nodiscard]] const std::vector<Factor>& factors() const { return factors_; }
  [[nodiscard]] std::size_t size() const { return factors_.size(); }
  /// f_j^{d_j}
  [[nodiscard]] Polynomial power(std::size_t j) const;
  [[nodiscard]] Polynomial product() const;

 private:
  std::vector<Factor> factors_;
};

struct ProjectorSet {
  FactoredMinPoly factors;
  Polynomial modulus;                  ///< product of the factors
  std::vector<Polynomial> projectors;  ///< one per factor, reduced mod modulus
};

/// Throws std::domain_error when m is constant or has non-coprime factors.
ProjectorSet bezout_projectors(const FactoredMinPoly& m);

/// For a simple root lambda with cofactor q: q(x)/q(lambda).
/// Throws std::domain_error when q(lambda) = 0.
Polynomial simple_projector(const Rational& lambda, const Polynomial& q);

/// Checks, as congruences modulo the set's modulus: sum Pi_j = 1,
/// Pi_i Pi_j = 0 (i != j), Pi_j^2 = Pi_j and f_j^{d_j} Pi_j = 0.
bool projector_congruences_hold(const ProjectorSet& set);

template <class V>
concept LinearElement = requires(V a, const V& b, const Rational& r) {
  { a += b };
  { b * r } -> std::convertible_to<V>;
  { b == b } -> std::convertible_to<bool>;
  { b.is_zero() } -> std::convertible_to<bool>;
};

/// p(A) x by Horner's scheme; `op` applies A.
template <LinearElement V, class Op>
V apply_poly(const Polynomial& p, Op&& op, const V& x) {
  if (p.is_zero()) return x * Rational(0);
  const auto& c = p.coefficients();
  V acc = x * c.back();
  for (std::size_t i = c.size() - 1; i-- > 0;) {
    acc = op(acc);
    if (!c[i].is_zero()) acc += x * c[i];
  }
  return acc;
}

/// Raised when composed projectors fail to be idempotent, which happens when
/// the supplied operators do not commute on the target space.
class NonCommutingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <class V>
struct OperatorDecomposition {
  ProjectorSet projectors;
  std::function<V(const V&)> op;
};

template <class V>
struct ComposedProjector {
  std::vector<std::size_t> indices;  ///< projector index chosen from each decomposition
  std::vector<V> images;             ///< image of each spanning vector
  bool trivial = true;               ///< every image is zero
};

/// All compositions Pi_{a1}(A1) o Pi_{a2}(A2) o ... over a spanning set of
/// the target space. Trivial compositions are flagged and kept.
template <LinearElement V>
std::vector<ComposedProjector<V>> mutual_projectors(const std::vector<OperatorDecomposition<V>>& decomps,
                                                    const std::vector<V>& spanning) {
  std::vector<ComposedProjector<V>> out;
  if (decomps.empty()) return out;

  auto apply_composed = [&](const std::vector<std::size_t>& idx, V v) {
    for (std::size_t d = decomps.size(); d-- > 0;) {
      v = apply_poly(decomps[d].projectors.projectors[idx[d]], decomps[d].op, v);
    }
    return v;
  };

  std::vector<std::size_t> idx(decomps.size(), 0);
  while (true) {
    ComposedProjector<V> cp;
    cp.indices = idx;
    for (const V& v : spanning) {
      V image = apply_composed(idx, v);
      if (!image.is_zero()) cp.trivial = false;
      cp.images.push_back(std::move(image));
    }
    for (const V& image : cp.images) {
      if (!(apply_composed(idx, image) == image)) {
        throw NonCommutingError("mutual_projectors: composed projector is not idempotent; operators do not commute");
      }
    }
    out.push_back(std::move(cp));

    std::size_t d = decomps.size();
    while (d-- > 0) {
      if (++idx[d] < decomps[d].projectors.projectors.size()) break;
      idx[d] = 0;
    }
    if (d == static_cast<std::size_t>(-1)) break;
  }
  return out;
}

}  // namespace ueaspin
