#include "ueaspin/uea.hpp"

#include <algorithm>
#include <mutex>
#include <ostream>
#include <shared_mutex>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace ueaspin::uea {

char axis_name(Axis a) { return "xyz"[index(a)]; }

Axis axis_from_char(char c) {
  switch (c) {
    case 'x':
    case '1':
      return Axis::x;
    case 'y':
    case '2':
      return Axis::y;
    case 'z':
    case '3':
      return Axis::z;
    default:
      throw std::invalid_argument(std::string("unknown generator '") + c + "'");
  }
}

int structure_constant(Axis a, Axis b, Axis c) {
  const int i = static_cast<int>(a), j = static_cast<int>(b), k = static_cast<int>(c);
  if (i == j || j == k || i == k) return 0;
  // Even permutations of (0,1,2) are the cyclic shifts.
  return ((j - i + 3) % 3 == 1) ? 1 : -1;
}

Cross cross(Axis a, Axis b) {
  if (a == b) return {};
  const auto c = static_cast<Axis>(3 - static_cast<int>(a) - static_cast<int>(b));
  return {structure_constant(a, b, c), c};
}

FreeWord parse_word(std::string_view letters) {
  FreeWord w;
  w.reserve(letters.size());
  for (char ch : letters) w.push_back(axis_from_char(ch));
  return w;
}

std::string word_string(const FreeWord& w) {
  std::string s;
  for (Axis a : w) s.push_back(axis_name(a));
  return s;
}

// ---------------------------------------------------------------- Element

Element Element::scalar(const Rational& c) {
  Element e;
  if (!c.is_zero()) e.terms_.emplace(Monomial{}, c);
  return e;
}

Element Element::generator(Axis a) {
  Monomial m;
  m.exponents[index(a)] = 1;
  return monomial(m);
}

Element Element::monomial(const Monomial& m, const Rational& c) {
  Element e;
  if (!c.is_zero()) e.terms_.emplace(m, c);
  return e;
}

int Element::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.degree()));
  return d;
}

Rational Element::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

Element Element::homogeneous_part(unsigned d) const {
  Element out;
  for (const auto& [m, c] : terms_) {
    if (m.degree() == d) out.terms_.emplace_hint(out.terms_.end(), m, c);
  }
  return out;
}

void Element::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void Element::add_scaled(const Element& other, const Rational& c) {
  if (c.is_zero()) return;
  for (const auto& [m, v] : other.terms_) add_term(m, v * c);
}

Element& Element::operator+=(const Element& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

Element& Element::operator-=(const Element& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

Element& Element::operator*=(const Rational& rhs) {
  if (rhs.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= rhs;
  return *this;
}

Element Element::operator-() const { return *this * Rational(-1); }

Element operator*(const Element& a, const Element& b) { return multiply(a, b); }

namespace {

// Highest degree first; within a degree, larger exponent triples first so
// that J_x-heavy terms lead.
std::vector<std::pair<Monomial, Rational>> display_order(const Element::Terms& terms) {
  std::vector<std::pair<Monomial, Rational>> v(terms.begin(), terms.end());
  std::stable_sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
    if (a.first.degree() != b.first.degree()) return a.first.degree() > b.first.degree();
    return a.first > b.first;
  });
  return v;
}

template <class MonomialWriter, class CoeffWriter>
std::string render(const Element::Terms& terms, MonomialWriter write_monomial, CoeffWriter write_coeff,
                   std::string_view sep) {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : display_order(terms)) {
    const Rational mag = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == Rational(1);
    if (m.degree() == 0) {
      write_coeff(os, mag);
      continue;
    }
    if (!unit) {
      write_coeff(os, mag);
      os << sep;
    }
    write_monomial(os, m);
  }
  return os.str();
}

}  // namespace

std::string Element::to_string() const {
  return render(
      terms_,
      [](std::ostream& os, const Monomial& m) {
        bool first = true;
        for (Axis a : kAxes) {
          if (m[a] == 0) continue;
          if (!first) os << "*";
          first = false;
          os << "J" << axis_name(a);
          if (m[a] > 1) os << "^" << m[a];
        }
      },
      [](std::ostream& os, const Rational& r) { os << r; }, "*");
}

std::string Element::to_latex() const {
  return render(
      terms_,
      [](std::ostream& os, const Monomial& m) {
        bool first = true;
        for (Axis a : kAxes) {
          if (m[a] == 0) continue;
          if (!first) os << " ";
          first = false;
          os << "J_" << axis_name(a);
          if (m[a] > 1) os << "^{" << m[a] << "}";
        }
      },
      [](std::ostream& os, const Rational& r) {
        if (r.is_integer()) {
          os << r;
        } else {
          os << "\\frac{" << r.numerator_string() << "}{" << r.denominator_string() << "}";
        }
      },
      " ");
}

std::ostream& operator<<(std::ostream& os, const Element& e) { return os << e.to_string(); }

// ------------------------------------------------------ generator kernels

namespace {

std::uint64_t cache_key(Axis g, const Monomial& m) {
  return static_cast<std::uint64_t>(index(g)) | (static_cast<std::uint64_t>(m.exponents[0]) << 2U) |
         (static_cast<std::uint64_t>(m.exponents[1]) << 22U) | (static_cast<std::uint64_t>(m.exponents[2]) << 42U);
}

// Memo table shared between threads. Entries are never erased, so references
// handed out stay valid; concurrent inserts of the same key are idempotent.
class KernelCache {
 public:
  const Element* find(std::uint64_t key) const {
    std::shared_lock lock(mutex_);
    auto it = table_.find(key);
    return it == table_.end() ? nullptr : &it->second;
  }
  const Element& insert(std::uint64_t key, Element value) {
    std::unique_lock lock(mutex_);
    return table_.try_emplace(key, std::move(value)).first->second;
  }

 private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<std::uint64_t, Element> table_;
};

KernelCache& left_cache() {
  static KernelCache cache;
  return cache;
}
KernelCache& right_cache() {
  static KernelCache cache;
  return cache;
}
KernelCache& e_cache() {
  static KernelCache cache;
  return cache;
}

int first_letter(const Monomial& m) {
  for (int a = 0; a < 3; ++a) {
    if (m.exponents[static_cast<std::size_t>(a)] > 0) return a;
  }
  return -1;
}

int last_letter(const Monomial& m) {
  for (int a = 2; a >= 0; --a) {
    if (m.exponents[static_cast<std::size_t>(a)] > 0) return a;
  }
  return -1;
}

Monomial bumped(Monomial m, Axis a, int delta) {
  m.exponents[index(a)] = static_cast<std::uint32_t>(static_cast<int>(m.exponents[index(a)]) + delta);
  return m;
}

Element left_gen_monomial(Axis g, const Monomial& m);
Element right_gen_monomial(Axis g, const Monomial& m);

// g * m in PBW form. When g precedes the first letter the product is already
// ordered; otherwise g h rest = h (g rest) + [g,h] rest with h the first letter.
const Element& left_gen_cached(Axis g, const Monomial& m) {
  const auto key = cache_key(g, m);
  if (const Element* hit = left_cache().find(key)) return *hit;
  return left_cache().insert(key, left_gen_monomial(g, m));
}

Element left_gen_monomial(Axis g, const Monomial& m) {
  const int h = first_letter(m);
  if (h < 0 || static_cast<int>(index(g)) <= h) return Element::monomial(bumped(m, g, +1));
  const auto ha = static_cast<Axis>(h);
  const Monomial rest = bumped(m, ha, -1);
  Element out;
  for (const auto& [t, c] : left_gen_cached(g, rest).terms()) out.add_scaled(left_gen_cached(ha, t), c);
  if (const Cross gh = cross(g, ha); gh.sign != 0) out.add_scaled(left_gen_cached(gh.axis, rest), Rational(gh.sign));
  return out;
}

// m * g in PBW form: rest h g = (rest g) h + rest [h,g] with h the last letter.
const Element& right_gen_cached(Axis g, const Monomial& m) {
  const auto key = cache_key(g, m);
  if (const Element* hit = right_cache().find(key)) return *hit;
  return right_cache().insert(key, right_gen_monomial(g, m));
}

Element right_gen_monomial(Axis g, const Monomial& m) {
  const int h = last_letter(m);
  if (h < 0 || static_cast<int>(index(g)) >= h) return Element::monomial(bumped(m, g, +1));
  const auto ha = static_cast<Axis>(h);
  const Monomial rest = bumped(m, ha, -1);
  Element out;
  for (const auto& [t, c] : right_gen_cached(g, rest).terms()) out.add_scaled(right_gen_cached(ha, t), c);
  if (const Cross hg = cross(ha, g); hg.sign != 0) out.add_scaled(right_gen_cached(hg.axis, rest), Rational(hg.sign));
  return out;
}

Element ad_gen_monomial(Axis g, const Monomial& m) {
  Element out = left_gen_cached(g, m);
  out -= right_gen_cached(g, m);
  return out;
}

const Element& e_monomial(const Monomial& m) {
  const auto key = cache_key(Axis::x, m);
  if (const Element* hit = e_cache().find(key)) return *hit;
  Element out;
  for (Axis a : kAxes) out += adjoint(a, ad_gen_monomial(a, m));
  return e_cache().insert(key, std::move(out));
}

}  // namespace

Element left_mul(Axis g, const Element& a) {
  Element out;
  for (const auto& [m, c] : a.terms()) out.add_scaled(left_gen_cached(g, m), c);
  return out;
}

Element right_mul(Axis g, const Element& a) {
  Element out;
  for (const auto& [m, c] : a.terms()) out.add_scaled(right_gen_cached(g, m), c);
  return out;
}

Element multiply(const Element& a, const Element& b) {
  Element out;
  for (const auto& [m, c] : a.terms()) {
    // x^i y^j z^k B = L_x^i L_y^j L_z^k B
    Element acc = b;
    for (Axis g : {Axis::z, Axis::y, Axis::x}) {
      for (std::uint32_t n = 0; n < m[g]; ++n) acc = left_mul(g, acc);
    }
    out.add_scaled(acc, c);
  }
  return out;
}

Element commutator(const Element& a, const Element& b) { return multiply(a, b) - multiply(b, a); }

Element power(const Element& a, unsigned n) {
  Element out = Element::scalar(1);
  for (unsigned i = 0; i < n; ++i) out = multiply(out, a);
  return out;
}

Element normal_form(const FreeWord& w) {
  Element out = Element::scalar(1);
  for (auto it = w.rbegin(); it != w.rend(); ++it) out = left_mul(*it, out);
  return out;
}

Element left_mul(const Element& v, const Element& a) { return multiply(v, a); }
Element right_mul(const Element& v, const Element& a) { return multiply(a, v); }

Element adjoint(Axis g, const Element& a) {
  Element out;
  for (const auto& [m, c] : a.terms()) {
    out.add_scaled(left_gen_cached(g, m), c);
    out.add_scaled(right_gen_cached(g, m), -c);
  }
  return out;
}

Element adjoint(const Element& u, const Element& a) {
  Element out;
  for (const auto& [m, c] : u.terms()) {
    Element acc = a;
    for (Axis g : {Axis::z, Axis::y, Axis::x}) {
      for (std::uint32_t n = 0; n < m[g]; ++n) acc = adjoint(g, acc);
    }
    out.add_scaled(acc, c);
  }
  return out;
}

const Element& casimir() {
  static const Element c = [] {
    Element e;
    for (Axis a : kAxes) {
      Monomial m;
      m.exponents[index(a)] = 2;
      e.add_term(m, Rational(1));
    }
    return e;
  }();
  return c;
}

Element e_action(const Element& a) {
  Element out;
  for (const auto& [m, c] : a.terms()) out.add_scaled(e_monomial(m), c);
  return out;
}

Element e_action_via_left_right(const Element& a) {
  Element out = multiply(casimir(), a) * Rational(2);
  for (Axis g : kAxes) out.add_scaled(right_mul(g, left_mul(g, a)), Rational(-2));
  return out;
}

Element e_factor(unsigned k, const Element& a) {
  Element out = e_action(a);
  out.add_scaled(a, Rational(static_cast<std::int64_t>(k) * (k + 1)));
  return out;
}

Element symmetrize(const Monomial& m) {
  FreeWord w;
  for (Axis a : kAxes) w.insert(w.end(), m[a], a);
  Element sum;
  std::int64_t count = 0;
  do {
    sum += normal_form(w);
    ++count;
  } while (std::next_permutation(w.begin(), w.end()));
  return sum * Rational(1, count);
}

// ---------------------------------------------------------- MonomialIndex

MonomialIndex::MonomialIndex(unsigned max_degree) : max_degree_(max_degree) {
  for (unsigned d = 0; d <= max_degree; ++d) {
    for (unsigned i = d + 1; i-- > 0;) {
      for (unsigned j = d - i + 1; j-- > 0;) {
        Monomial m{{i, j, d - i - j}};
        positions_.emplace(m, monomials_.size());
        monomials_.push_back(m);
      }
    }
  }
}

std::size_t MonomialIndex::position(const Monomial& m) const {
  auto it = positions_.find(m);
  if (it == positions_.end()) throw std::out_of_range("MonomialIndex: monomial above the degree cap");
  return it->second;
}

std::pair<std::size_t, std::size_t> MonomialIndex::degree_range(unsigned d) const {
  if (d > max_degree_) throw std::out_of_range("MonomialIndex: degree above the cap");
  return {pbw_dimension(d) - (d + 1) * (d + 2) / 2, pbw_dimension(d)};
}

RationalVector MonomialIndex::coordinates(const Element& e) const {
  RationalVector v(size());
  for (const auto& [m, c] : e.terms()) v[position(m)] = c;
  return v;
}

Element MonomialIndex::element(const RationalVector& v) const {
  if (v.size() != size()) throw std::invalid_argument("MonomialIndex: wrong vector length");
  Element e;
  for (std::size_t i = 0; i < v.size(); ++i) e.add_term(monomials_[i], v[i]);
  return e;
}

std::size_t pbw_dimension(unsigned n) {
  const std::size_t m = n;
  return (m + 1) * (m + 2) * (m + 3) / 6;
}

}  // namespace ueaspin::uea
