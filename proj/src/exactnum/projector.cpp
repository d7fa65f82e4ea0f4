#include "ueaspin/projector.hpp"

namespace ueaspin {

FactoredMinPoly::FactoredMinPoly(std::vector<Factor> factors) : factors_(std::move(factors)) {
  for (auto& f : factors_) {
    if (f.irreducible.is_constant()) throw std::domain_error("FactoredMinPoly: constant factor");
    if (f.multiplicity == 0) throw std::domain_error("FactoredMinPoly: zero multiplicity");
    f.irreducible = f.irreducible.monic();
  }
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    for (std::size_t j = i + 1; j < factors_.size(); ++j) {
      if (gcd(factors_[i].irreducible, factors_[j].irreducible).degree() > 0) {
        throw std::domain_error("FactoredMinPoly: factors " + factors_[i].irreducible.to_string() + " and " +
                                factors_[j].irreducible.to_string() + " are not coprime");
      }
    }
  }
}

Polynomial FactoredMinPoly::power(std::size_t j) const {
  return pow(factors_.at(j).irreducible, factors_.at(j).multiplicity);
}

Polynomial FactoredMinPoly::product() const {
  Polynomial m = Polynomial::constant(1);
  for (std::size_t j = 0; j < factors_.size(); ++j) m *= power(j);
  return m;
}

ProjectorSet bezout_projectors(const FactoredMinPoly& m) {
  if (m.size() == 0) throw std::domain_error("bezout_projectors: constant minimal polynomial");
  ProjectorSet set{m, m.product(), {}};
  for (std::size_t j = 0; j < m.size(); ++j) {
    const Polynomial p = m.power(j);
    const Polynomial q = divmod(set.modulus, p).first;
    const BezoutResult bz = extended_gcd(p, q);
    if (bz.g.degree() != 0) throw std::domain_error("bezout_projectors: factor shares a root with its cofactor");
    set.projectors.push_back((bz.b * q) % set.modulus);
  }
  return set;
}

Polynomial simple_projector(const Rational& lambda, const Polynomial& q) {
  const Rational at = q.evaluate(lambda);
  if (at.is_zero()) throw std::domain_error("simple_projector: cofactor vanishes at the root");
  return q * (Rational(1) / at);
}

bool projector_congruences_hold(const ProjectorSet& set) {
  const Polynomial& m = set.modulus;
  const Polynomial one = Polynomial::constant(1);
  Polynomial sum;
  for (std::size_t i = 0; i < set.projectors.size(); ++i) {
    const Polynomial& pi = set.projectors[i];
    sum += pi;
    if (!((pi * pi - pi) % m).is_zero()) return false;
    if (!((set.factors.power(i) * pi) % m).is_zero()) return false;
    for (std::size_t j = 0; j < set.projectors.size(); ++j) {
      if (i != j && !((pi * set.projectors[j]) % m).is_zero()) return false;
    }
  }
  return ((sum - one) % m).is_zero();
}

}  // namespace ueaspin
