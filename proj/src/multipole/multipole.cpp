#include "ueaspin/multipole.hpp"

#include <algorithm>
#include <array>
#include <mutex>
#include <shared_mutex>
#include <utility>

#include "ueaspin/rational_matrix.hpp"

namespace ueaspin::multipole {

using uea::casimir;
using uea::cross;
using uea::e_action;
using uea::kAxes;
using uea::structure_constant;

namespace {

Rational rat(long long n) { return Rational(static_cast<std::int64_t>(n)); }

Polynomial e_root_factor(unsigned j) {
  // E + j(j+1), i.e. the root -j(j+1).
  const long long jj = j;
  return Polynomial::linear_root(-rat(jj * (jj + 1)));
}

Element apply_projector(const Polynomial& p, const Element& y) {
  return apply_poly(p, [](const Element& e) { return e_action(e); }, y);
}

void require_level(unsigned k, const Element& x) {
  if (!uea::e_factor(k, x).is_zero()) {
    throw LevelMismatchError("step: element is not annihilated by E_" + std::to_string(k));
  }
}

FreeWord without(const FreeWord& w, std::size_t p) {
  FreeWord out;
  out.reserve(w.size());
  for (std::size_t j = 0; j < w.size(); ++j) {
    if (j != p) out.push_back(w[j]);
  }
  return out;
}

class MultipoleCache {
 public:
  const Element* find(const FreeWord& w) const {
    std::shared_lock lock(mutex_);
    auto it = table_.find(w);
    return it == table_.end() ? nullptr : &it->second;
  }
  const Element& insert(const FreeWord& w, Element value) {
    std::unique_lock lock(mutex_);
    return table_.try_emplace(w, std::move(value)).first->second;
  }

 private:
  mutable std::shared_mutex mutex_;
  std::map<FreeWord, Element> table_;
};

MultipoleCache& multipole_cache() {
  static MultipoleCache cache;
  return cache;
}

void collect_sorted(unsigned k, Axis from, FreeWord& prefix, std::vector<FreeWord>& out) {
  if (prefix.size() == k) {
    out.push_back(prefix);
    return;
  }
  for (Axis a : kAxes) {
    if (uea::index(a) < uea::index(from)) continue;
    prefix.push_back(a);
    collect_sorted(k, a, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::string step_name(StepKind kind) {
  switch (kind) {
    case StepKind::down:
      return "down";
    case StepKind::level:
      return "level";
    case StepKind::up:
      return "up";
  }
  return "?";
}

FactoredMinPoly step_min_poly(unsigned k) {
  if (k == 0) return FactoredMinPoly({{Polynomial::x(), 2}, {e_root_factor(1), 1}});
  return FactoredMinPoly({{e_root_factor(k - 1), 1}, {e_root_factor(k), 1}, {e_root_factor(k + 1), 1}});
}

Polynomial step_polynomial(StepKind kind, unsigned k) {
  static std::mutex mutex;
  static std::map<std::pair<unsigned, int>, Polynomial> table;
  const auto key = std::make_pair(k, static_cast<int>(kind));
  {
    std::lock_guard lock(mutex);
    if (auto it = table.find(key); it != table.end()) return it->second;
  }
  Polynomial p;
  if (!(k == 0 && kind == StepKind::down)) {
    const ProjectorSet set = bezout_projectors(step_min_poly(k));
    std::size_t slot = static_cast<std::size_t>(kind);
    if (k == 0) --slot;
    p = set.projectors[slot];
  }
  std::lock_guard lock(mutex);
  return table.try_emplace(key, std::move(p)).first->second;
}

Element step(StepKind kind, Axis v, unsigned k, const Element& x) {
  require_level(k, x);
  return apply_projector(step_polynomial(kind, k), uea::left_mul(v, x));
}

Element step_right(StepKind kind, Axis v, unsigned k, const Element& x) {
  require_level(k, x);
  return apply_projector(step_polynomial(kind, k), uea::right_mul(v, x));
}

const Element& multipole(const FreeWord& w) {
  MultipoleCache& cache = multipole_cache();
  if (const Element* hit = cache.find(w)) return *hit;
  if (w.empty()) return cache.insert(w, Element::scalar(Rational(1)));
  const FreeWord tail(w.begin() + 1, w.end());
  const Element& inner = multipole(tail);
  const auto k = static_cast<unsigned>(tail.size());
  return cache.insert(w, apply_projector(step_polynomial(StepKind::up, k), uea::left_mul(w.front(), inner)));
}

const Element& multipole(unsigned k, const FreeWord& w) {
  if (w.size() != k) {
    throw std::domain_error("multipole: T_" + std::to_string(k) + " needs a word of length " + std::to_string(k) +
                            ", got " + std::to_string(w.size()));
  }
  return multipole(w);
}

void add_word(Tensor& t, const FreeWord& w, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = t.try_emplace(w, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) t.erase(it);
}

Element multipole(const Tensor& t) {
  Element out;
  std::size_t length = t.empty() ? 0 : t.begin()->first.size();
  for (const auto& [w, c] : t) {
    if (w.size() != length) throw std::domain_error("multipole: tensor mixes word lengths");
    out.add_scaled(multipole(w), c);
  }
  return out;
}

Tensor tensor_adjoint(Axis g, const Tensor& t) {
  Tensor out;
  for (const auto& [w, c] : t) {
    for (std::size_t p = 0; p < w.size(); ++p) {
      const uea::Cross gc = cross(g, w[p]);
      if (gc.sign == 0) continue;
      FreeWord next = w;
      next[p] = gc.axis;
      add_word(out, next, c * Rational(gc.sign));
    }
  }
  return out;
}

Tensor tensor_adjoint(const Element& u, const Tensor& t) {
  Tensor out;
  for (const auto& [m, c] : u.terms()) {
    Tensor acc = t;
    for (Axis g : {Axis::z, Axis::y, Axis::x}) {
      for (std::uint32_t n = 0; n < m[g]; ++n) acc = tensor_adjoint(g, acc);
    }
    for (const auto& [w, d] : acc) add_word(out, w, d * c);
  }
  return out;
}

std::vector<FreeWord> sorted_words(unsigned k) {
  std::vector<FreeWord> out;
  FreeWord prefix;
  collect_sorted(k, Axis::x, prefix, out);
  return out;
}

std::vector<FreeWord> all_words(unsigned k) {
  std::vector<FreeWord> out{FreeWord{}};
  for (unsigned i = 0; i < k; ++i) {
    std::vector<FreeWord> next;
    next.reserve(out.size() * 3);
    for (const FreeWord& w : out) {
      for (Axis a : kAxes) {
        next.push_back(w);
        next.back().push_back(a);
      }
    }
    out = std::move(next);
  }
  return out;
}

const MultipoleBasis& multipole_basis(unsigned k) {
  static std::mutex mutex;
  static std::map<unsigned, MultipoleBasis> table;
  {
    std::lock_guard lock(mutex);
    if (auto it = table.find(k); it != table.end()) return it->second;
  }
  MultipoleBasis basis;
  basis.level = k;
  const uea::MonomialIndex idx(k);
  EchelonBasis echelon(idx.size());
  for (const FreeWord& w : sorted_words(k)) {
    const Element& t = multipole(w);
    if (echelon.insert(idx.coordinates(t))) basis.components.push_back({k, w, t});
  }
  std::lock_guard lock(mutex);
  return table.try_emplace(k, std::move(basis)).first->second;
}

std::size_t image_rank(unsigned k) {
  const uea::MonomialIndex idx(k);
  EchelonBasis echelon(idx.size());
  for (const FreeWord& w : all_words(k)) echelon.insert(idx.coordinates(multipole(w)));
  return echelon.rank();
}

Element step_down_image(Axis a, const FreeWord& w) {
  const long long k = static_cast<long long>(w.size());
  if (k == 0) throw std::domain_error("step_down_image: needs k >= 1");
  Tensor inner;
  for (std::size_t p = 0; p < w.size(); ++p) {
    if (w[p] == a) add_word(inner, without(w, p), rat(2 * k - 1));
    for (std::size_t q = 0; q < w.size(); ++q) {
      if (q == p || w[p] != w[q]) continue;
      FreeWord rest{a};
      for (std::size_t j = 0; j < w.size(); ++j) {
        if (j != p && j != q) rest.push_back(w[j]);
      }
      add_word(inner, rest, Rational(-1));
    }
  }
  const Element factor = casimir() * Rational(4) + Element::scalar(rat((k - 1) * (k + 1)));
  return uea::left_mul(factor, multipole(inner)) * (Rational(1) / rat(4 * (4 * k * k - 1)));
}

Element step_level_image(Axis a, const FreeWord& w) {
  Tensor t;
  for (std::size_t p = 0; p < w.size(); ++p) {
    for (Axis c : kAxes) {
      const int eps = structure_constant(a, w[p], c);
      if (eps == 0) continue;
      FreeWord next = w;
      next[p] = c;
      add_word(t, next, Rational(eps, 2));
    }
  }
  return multipole(t);
}

bool verify_step_down_image(unsigned k, Axis a, const FreeWord& w) {
  if (k == 0) throw std::domain_error("verify_step_down_image: needs k >= 1");
  return step(StepKind::down, a, k, multipole(k, w)) == step_down_image(a, w);
}

bool verify_step_level_image(unsigned k, Axis a, const FreeWord& w) {
  if (k == 0) throw std::domain_error("verify_step_level_image: needs k >= 1");
  return step(StepKind::level, a, k, multipole(k, w)) == step_level_image(a, w);
}

bool verify_right_step_identities(unsigned k, Axis v, const FreeWord& w) {
  const Element& t = multipole(k, w);
  return step_right(StepKind::down, v, k, t) == step(StepKind::down, v, k, t) &&
         step_right(StepKind::up, v, k, t) == step(StepKind::up, v, k, t) &&
         step_right(StepKind::level, v, k, t) == -step(StepKind::level, v, k, t);
}

bool ad_commutation_check(unsigned k, const Element& u, const FreeWord& w) {
  Tensor t;
  add_word(t, w, Rational(1));
  return uea::adjoint(u, multipole(k, w)) == multipole(tensor_adjoint(u, t));
}

bool annihilation_holds(const FreeWord& w) {
  return uea::e_factor(static_cast<unsigned>(w.size()), multipole(w)).is_zero();
}

bool totally_symmetric(const FreeWord& w) {
  const Element& reference = multipole(w);
  FreeWord perm = w;
  std::sort(perm.begin(), perm.end());
  do {
    if (!(multipole(perm) == reference)) return false;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return true;
}

bool contraction_vanishes(const FreeWord& rest, std::size_t p, std::size_t q) {
  const std::size_t k = rest.size() + 2;
  if (!(p < q && q < k)) throw std::domain_error("contraction_vanishes: need p < q < k");
  Element sum;
  for (Axis a : kAxes) {
    FreeWord w;
    auto it = rest.begin();
    for (std::size_t j = 0; j < k; ++j) w.push_back(j == p || j == q ? a : *it++);
    sum += multipole(w);
  }
  return sum.is_zero();
}

bool step_resolution_holds(Axis v, const FreeWord& w) {
  const auto k = static_cast<unsigned>(w.size());
  const Element& t = multipole(w);
  return uea::left_mul(v, t) == step(StepKind::down, v, k, t) + step(StepKind::level, v, k, t) +
                                    step(StepKind::up, v, k, t);
}

Polynomial cubic_polynomial(unsigned m) {
  const unsigned lower = m == 0 ? 0 : m - 1;
  return e_root_factor(m) * e_root_factor(m + 1) * e_root_factor(lower);
}

bool cubic_annihilates(unsigned m, Axis v, const FreeWord& w) {
  if (w.size() != m) throw std::domain_error("cubic_annihilates: word length must equal m");
  return apply_projector(cubic_polynomial(m), uea::left_mul(v, multipole(w))).is_zero();
}

bool cubic_is_minimal(unsigned m) {
  if (m == 0) throw std::domain_error("cubic_is_minimal: needs m >= 1");
  const std::array<Polynomial, 3> f{e_root_factor(m - 1), e_root_factor(m), e_root_factor(m + 1)};
  const std::array<Polynomial, 3> divisors{f[0] * f[1], f[0] * f[2], f[1] * f[2]};
  std::array<bool, 3> witnessed{};
  for (const FreeWord& w : sorted_words(m)) {
    for (Axis v : kAxes) {
      const Element y = uea::left_mul(v, multipole(w));
      for (std::size_t d = 0; d < divisors.size(); ++d) {
        if (!witnessed[d] && !apply_projector(divisors[d], y).is_zero()) witnessed[d] = true;
      }
      if (std::all_of(witnessed.begin(), witnessed.end(), [](bool b) { return b; })) return true;
    }
  }
  return false;
}

}  // namespace ueaspin::multipole
