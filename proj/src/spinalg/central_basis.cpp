#include <algorithm>
#include <stdexcept>

#include "ueaspin/spinalg.hpp"

namespace ueaspin::spinalg {

Element central_expansion(const CentralEntry& e) {
  const auto& components = multipole::multipole_basis(e.level).components;
  if (e.component >= components.size()) throw std::out_of_range("central_expansion: component out of range");
  const Element& t = components[e.component].expansion;
  return e.casimir_power == 0 ? t : uea::left_mul(uea::power(uea::casimir(), e.casimir_power), t);
}

CentralMultipoleBasis& CentralMultipoleBasis::shared() {
  static CentralMultipoleBasis basis;
  return basis;
}

const CentralMultipoleBasis::Sector& CentralMultipoleBasis::sector(unsigned d) {
  std::lock_guard lock(mutex_);
  if (auto it = sectors_.find(d); it != sectors_.end()) return *it->second;

  auto s = std::make_unique<Sector>();
  for (unsigned n = d % 2; n <= d; n += 2) {
    const unsigned m = (d - n) / 2;
    for (std::size_t c = 0; c < 2 * n + 1; ++c) {
      CentralEntry e{m, n, c};
      s->expansions.push_back(central_expansion(e));
      s->entries.push_back(e);
    }
  }
  s->index = uea::MonomialIndex(d);
  s->range = s->index.degree_range(d);
  const std::size_t width = s->range.second - s->range.first;
  if (width != s->entries.size()) {
    throw std::logic_error("CentralMultipoleBasis: sector " + std::to_string(d) + " has " +
                           std::to_string(s->entries.size()) + " entries for " + std::to_string(width) +
                           " monomials");
  }
  RationalMatrix leading(width, width);
  for (std::size_t col = 0; col < width; ++col) {
    const RationalVector coords = s->index.coordinates(s->expansions[col]);
    for (std::size_t row = 0; row < width; ++row) leading(row, col) = coords[s->range.first + row];
  }
  auto inverse = leading.inverse();
  if (!inverse) throw std::logic_error("CentralMultipoleBasis: degree " + std::to_string(d) + " sector is singular");
  s->inverse = std::move(*inverse);
  return *sectors_.emplace(d, std::move(s)).first->second;
}

void CentralMultipoleBasis::prepare(unsigned degree) {
  for (unsigned d = 0; d <= degree; ++d) (void)sector(d);
}

std::vector<CentralEntry> CentralMultipoleBasis::entries(unsigned cap) {
  std::vector<CentralEntry> out;
  for (unsigned d = 0; d <= cap; ++d) {
    const auto& e = sector(d).entries;
    out.insert(out.end(), e.begin(), e.end());
  }
  return out;
}

CentralCoefficients CentralMultipoleBasis::reduce(const Element& x) {
  CentralCoefficients out;
  Element rest = x;
  for (int d = rest.degree(); d >= 0; d = std::min(d - 1, rest.degree())) {
    const Sector& s = sector(static_cast<unsigned>(d));
    const std::size_t width = s.range.second - s.range.first;
    RationalVector lead(width);
    for (const auto& [m, c] : rest.terms()) {
      if (m.degree() == static_cast<unsigned>(d)) lead[s.index.position(m) - s.range.first] = c;
    }
    const RationalVector coeffs = s.inverse * lead;
    for (std::size_t i = 0; i < width; ++i) {
      if (coeffs[i].is_zero()) continue;
      out.emplace(s.entries[i], coeffs[i]);
      rest.add_scaled(s.expansions[i], -coeffs[i]);
    }
    if (!rest.homogeneous_part(static_cast<unsigned>(d)).is_zero()) {
      throw std::logic_error("central_multipole_reduce: degree " + std::to_string(d) + " did not cancel");
    }
  }
  return out;
}

CentralCoefficients central_multipole_reduce(const Element& x) { return CentralMultipoleBasis::shared().reduce(x); }

Element reconstruct(const CentralCoefficients& c) {
  Element out;
  for (const auto& [entry, coeff] : c) out.add_scaled(central_expansion(entry), coeff);
  return out;
}

}  // namespace ueaspin::spinalg
