#include <algorithm>
#include <atomic>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "ueaspin/spinalg.hpp"

namespace ueaspin::spinalg {

namespace {

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body) {
  const std::size_t workers = std::min<std::size_t>(std::max(1u, std::thread::hardware_concurrency()), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      try {
        for (std::size_t i = next++; i < count; i = next++) body(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = count;
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

bool is_zero(const RationalVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& r) { return r.is_zero(); });
}

RationalVector scaled(RationalVector v, const Rational& c) {
  for (auto& x : v) x *= c;
  return v;
}

RationalVector& accumulate(RationalVector& acc, const RationalVector& v, const Rational& c = Rational(1)) {
  for (std::size_t i = 0; i < acc.size(); ++i) {
    if (!v[i].is_zero()) acc[i] += v[i] * c;
  }
  return acc;
}

}  // namespace

std::size_t flat_index(unsigned level, std::size_t component) {
  return static_cast<std::size_t>(level) * level + component;
}

std::string basis_label_string(const SpinBasisLabel& b) {
  if (b.level == 0) return "T0";
  const auto& c = multipole::multipole_basis(b.level).components.at(b.component);
  return "T" + std::to_string(b.level) + "(" + uea::word_string(c.indices) + ")";
}

QuotientMap::QuotientMap(unsigned two_s) : two_s_(two_s) {}

Rational QuotientMap::casimir_scalar() const {
  const auto k = static_cast<std::int64_t>(two_s_);
  return Rational(-k * (k + 2), 4);
}

RationalVector QuotientMap::apply(const CentralCoefficients& c) const {
  RationalVector out(dimension());
  const Rational scalar = casimir_scalar();
  for (const auto& [entry, coeff] : c) {
    if (entry.level > two_s_) continue;
    out[flat_index(entry.level, entry.component)] += coeff * pow(scalar, entry.casimir_power);
  }
  return out;
}

RationalVector QuotientMap::reduce(const Element& x) const { return apply(central_multipole_reduce(x)); }

SpinAlgebraTable::SpinAlgebraTable(unsigned two_s, std::vector<RationalVector> products)
    : two_s_(two_s), products_(std::move(products)) {
  for (unsigned n = 0; n <= two_s; ++n) {
    for (std::size_t c = 0; c < 2 * n + 1; ++c) basis_.push_back({n, c});
  }
  const std::size_t dim = basis_.size();
  if (products_.size() != dim * dim) throw std::invalid_argument("SpinAlgebraTable: wrong number of products");
  for (const auto& p : products_) {
    if (p.size() != dim) throw std::invalid_argument("SpinAlgebraTable: product has wrong dimension");
  }
}

Element SpinAlgebraTable::basis_element(std::size_t i) const {
  const SpinBasisLabel& b = basis_.at(i);
  return multipole::multipole_basis(b.level).components.at(b.component).expansion;
}

std::vector<StructureConstant> SpinAlgebraTable::constants() const {
  std::vector<StructureConstant> out;
  const std::size_t dim = dimension();
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      const RationalVector& p = product(i, j);
      for (std::size_t l = 0; l < dim; ++l) {
        if (!p[l].is_zero()) out.push_back({i, j, l, p[l]});
      }
    }
  }
  return out;
}

RationalVector SpinAlgebraTable::unit(std::size_t i) const {
  RationalVector v(dimension());
  v.at(i) = Rational(1);
  return v;
}

RationalVector SpinAlgebraTable::multiply(const RationalVector& a, const RationalVector& b) const {
  const std::size_t dim = dimension();
  if (a.size() != dim || b.size() != dim) throw std::invalid_argument("SpinAlgebraTable::multiply: dimension mismatch");
  RationalVector out(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim; ++j) {
      if (!b[j].is_zero()) accumulate(out, product(i, j), a[i] * b[j]);
    }
  }
  return out;
}

RationalVector SpinAlgebraTable::generator(Axis a) const {
  return QuotientMap(two_s_).reduce(Element::generator(a));
}

SpinAlgebraTable build_spin_algebra(unsigned two_s, unsigned cap) {
  if (two_s > cap) {
    throw std::domain_error("build_spin_algebra: 2s = " + std::to_string(two_s) + " exceeds the cap " +
                            std::to_string(cap));
  }
  CentralMultipoleBasis::shared().prepare(2 * two_s);
  const QuotientMap q(two_s);
  const std::size_t dim = q.dimension();
  std::vector<Element> expansions;
  for (unsigned n = 0; n <= two_s; ++n) {
    for (const auto& c : multipole::multipole_basis(n).components) expansions.push_back(c.expansion);
  }
  std::vector<RationalVector> products(dim * dim);
  parallel_for(dim * dim, [&](std::size_t p) {
    products[p] = q.reduce(uea::multiply(expansions[p / dim], expansions[p % dim]));
  });
  return SpinAlgebraTable(two_s, std::move(products));
}

const SpinAlgebraTable& spin_algebra(unsigned two_s) {
  static std::mutex mutex;
  static std::map<unsigned, std::unique_ptr<SpinAlgebraTable>> tables;
  std::lock_guard lock(mutex);
  auto& slot = tables[two_s];
  if (!slot) slot = std::make_unique<SpinAlgebraTable>(build_spin_algebra(two_s));
  return *slot;
}

nlohmann::json to_json(const SpinAlgebraTable& t) {
  nlohmann::json basis = nlohmann::json::array();
  for (const auto& b : t.basis()) {
    const auto& comp = multipole::multipole_basis(b.level).components.at(b.component);
    basis.push_back({{"n", b.level}, {"component", b.component}, {"indices", uea::word_string(comp.indices)}});
  }
  nlohmann::json constants = nlohmann::json::array();
  for (const auto& c : t.constants()) {
    constants.push_back({{"i", c.i}, {"j", c.j}, {"l", c.l}, {"c", c.c.to_fraction_string()}});
  }
  return {{"two_s", t.two_s()}, {"basis", basis}, {"constants", constants}};
}

SpinAlgebraTable spin_table_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("two_s") || !j.contains("constants")) {
    throw std::invalid_argument("spin_table_from_json: need \"two_s\" and \"constants\"");
  }
  if (!j.at("two_s").is_number_unsigned()) throw std::invalid_argument("spin_table_from_json: bad \"two_s\"");
  const auto two_s = j.at("two_s").get<unsigned>();
  const std::size_t dim = static_cast<std::size_t>(two_s + 1) * (two_s + 1);
  std::vector<RationalVector> products(dim * dim, RationalVector(dim));
  for (const auto& c : j.at("constants")) {
    for (const char* key : {"i", "j", "l"}) {
      if (!c.contains(key) || !c.at(key).is_number_unsigned() || c.at(key).get<std::size_t>() >= dim) {
        throw std::invalid_argument(std::string("spin_table_from_json: bad index \"") + key + "\"");
      }
    }
    if (!c.contains("c") || !c.at("c").is_string()) throw std::invalid_argument("spin_table_from_json: bad \"c\"");
    products[c.at("i").get<std::size_t>() * dim + c.at("j").get<std::size_t>()][c.at("l").get<std::size_t>()] =
        Rational::parse(c.at("c").get<std::string>());
  }
  return SpinAlgebraTable(two_s, std::move(products));
}

bool casimir_scalar_check(unsigned two_s) {
  const SpinAlgebraTable& t = spin_algebra(two_s);
  const QuotientMap q(two_s);
  RationalVector c(t.dimension());
  for (Axis a : uea::kAxes) accumulate(c, t.multiply(t.generator(a), t.generator(a)));
  for (std::size_t i = 0; i < t.dimension(); ++i) {
    const RationalVector expected = scaled(t.unit(i), q.casimir_scalar());
    if (t.multiply(c, t.unit(i)) != expected || t.multiply(t.unit(i), c) != expected) return false;
    if (q.reduce(uea::left_mul(uea::casimir(), t.basis_element(i))) != expected) return false;
  }
  return true;
}

bool eigenspectrum_check(unsigned two_s, Axis a) {
  const SpinAlgebraTable& t = spin_algebra(two_s);
  const Element ja = Element::generator(a);
  const Element ja2 = uea::multiply(ja, ja);
  // Table side and U side of the same polynomial.
  RationalVector p = t.unit(0);
  Element u = Element::scalar(Rational(1));
  auto times = [&](const RationalVector& v, const Element& e) {
    p = t.multiply(p, v);
    u = uea::multiply(u, e);
  };
  const RationalVector g = t.generator(a);
  const RationalVector g2 = t.multiply(g, g);
  auto shifted = [&](const Rational& shift) {
    RationalVector v = g2;
    return accumulate(v, t.unit(0), shift);
  };
  if (two_s % 2 == 1) {
    for (unsigned j = 0; 2 * j + 1 <= two_s; ++j) {
      const Rational shift = pow(Rational(2 * j + 1, 2), 2);
      times(shifted(shift), ja2 + Element::scalar(shift));
    }
  } else {
    times(g, ja);
    for (unsigned j = 1; 2 * j <= two_s; ++j) {
      const Rational shift(static_cast<std::int64_t>(j) * j);
      times(shifted(shift), ja2 + Element::scalar(shift));
    }
  }
  return is_zero(p) && is_zero(QuotientMap(two_s).reduce(u));
}

bool top_multipole_vanishes(unsigned two_s) {
  const QuotientMap q(two_s);
  for (unsigned n : {two_s + 1, two_s + 2}) {
    for (const auto& c : multipole::multipole_basis(n).components) {
      if (!is_zero(q.reduce(c.expansion))) return false;
    }
  }
  return true;
}

bool casimir_factor_identity_check(unsigned k) {
  const QuotientMap q(k);
  const auto kk = static_cast<std::int64_t>(k);
  const Element factor = uea::casimir() * Rational(4) + Element::scalar(Rational(kk * (kk + 2)));
  for (const auto& c : multipole::multipole_basis(k).components) {
    if (!is_zero(q.reduce(uea::left_mul(factor, c.expansion)))) return false;
  }
  return true;
}

bool stepdown_stepup_vanishes(unsigned two_s, Axis a, Axis b) {
  const QuotientMap q(two_s);
  for (const auto& w : multipole::sorted_words(two_s)) {
    const Element up = multipole::step(multipole::StepKind::up, b, two_s, multipole::multipole(w));
    const Element down = multipole::step(multipole::StepKind::down, a, two_s + 1, up);
    if (!is_zero(q.reduce(down))) return false;
  }
  return true;
}

bool identity_element_check(const SpinAlgebraTable& t) {
  for (std::size_t i = 0; i < t.dimension(); ++i) {
    if (t.product(0, i) != t.unit(i) || t.product(i, 0) != t.unit(i)) return false;
  }
  return true;
}

bool associative(const SpinAlgebraTable& t, std::size_t i, std::size_t j, std::size_t l) {
  return t.multiply(t.product(i, j), t.unit(l)) == t.multiply(t.unit(i), t.product(j, l));
}

bool commutator_closure_check(const SpinAlgebraTable& t) {
  for (Axis a : uea::kAxes) {
    for (Axis b : uea::kAxes) {
      RationalVector lhs = t.multiply(t.generator(a), t.generator(b));
      accumulate(lhs, t.multiply(t.generator(b), t.generator(a)), Rational(-1));
      RationalVector rhs(t.dimension());
      for (Axis c : uea::kAxes) accumulate(rhs, t.generator(c), Rational(uea::structure_constant(a, b, c)));
      if (lhs != rhs) return false;
    }
  }
  return true;
}

std::size_t quotient_rank(unsigned two_s) {
  const SpinAlgebraTable& t = spin_algebra(two_s);
  const QuotientMap q(two_s);
  EchelonBasis echelon(t.dimension());
  for (std::size_t i = 0; i < t.dimension(); ++i) echelon.insert(q.reduce(t.basis_element(i)));
  return echelon.rank();
}

bool clifford_check(const SpinAlgebraTable& t) {
  if (t.two_s() != 1) throw std::invalid_argument("clifford_check: needs 2s = 1");
  for (Axis a : uea::kAxes) {
    for (Axis b : uea::kAxes) {
      RationalVector lhs = t.multiply(t.generator(a), t.generator(b));
      accumulate(lhs, t.multiply(t.generator(b), t.generator(a)));
      const RationalVector rhs = scaled(t.unit(0), a == b ? Rational(-1, 2) : Rational(0));
      if (lhs != rhs) return false;
    }
  }
  return true;
}

bool kemmer_check(const SpinAlgebraTable& t) {
  if (t.two_s() != 2) throw std::invalid_argument("kemmer_check: needs 2s = 2");
  for (Axis a : uea::kAxes) {
    for (Axis b : uea::kAxes) {
      for (Axis c : uea::kAxes) {
        RationalVector lhs = t.multiply(t.multiply(t.generator(a), t.generator(b)), t.generator(c));
        accumulate(lhs, t.multiply(t.multiply(t.generator(c), t.generator(b)), t.generator(a)));
        RationalVector rhs(t.dimension());
        if (a == b) accumulate(rhs, t.generator(c), Rational(-1));
        if (b == c) accumulate(rhs, t.generator(a), Rational(-1));
        if (lhs != rhs) return false;
      }
    }
  }
  return true;
}

}  // namespace ueaspin::spinalg
