// Acceptance run: one PASS/FAIL line per criterion, each with its time budget.
// usage: acceptance <path-to-ueaspin> <golden-dir>

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "support/generators.hpp"
#include "ueaspin/cli.hpp"
#include "ueaspin/oracle.hpp"
#include "ueaspin/projector.hpp"

namespace uea = ueaspin::uea;
namespace mp = ueaspin::multipole;
namespace sa = ueaspin::spinalg;
namespace oracle = ueaspin::oracle;
using ueaspin::Factor;
using ueaspin::FactoredMinPoly;
using ueaspin::Polynomial;
using ueaspin::Rational;
using ueaspin::testing::random_element;
using ueaspin::testing::random_rational;
using ueaspin::testing::random_word;
using ueaspin::testing::uniform_int;
using uea::Axis;
using uea::Element;

namespace {

constexpr std::array<Axis, 3> kAxes{Axis::x, Axis::y, Axis::z};

std::string g_tool;
std::filesystem::path g_golden;

// Exposes the first failing detail of a criterion on stderr.
bool expect(bool ok, const std::string& what) {
  if (!ok) std::cerr << "  failed: " << what << '\n';
  return ok;
}

bool projector_suite() {
  bool ok = true;
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Factor> factors;
    std::set<Rational> roots;
    int degree = 0;
    const int target = uniform_int(1, 6);
    while (degree < target) {
      const Rational r = random_rational();
      if (!roots.insert(r).second) continue;
      const auto mult = static_cast<unsigned>(uniform_int(1, std::min(3, target - degree)));
      factors.push_back({Polynomial::linear_root(r), mult});
      degree += static_cast<int>(mult);
    }
    const FactoredMinPoly m(factors);
    const auto set = ueaspin::bezout_projectors(m);
    ok &= expect(set.projectors.size() == factors.size(), "one projector per factor");
    Polynomial modulus = Polynomial::constant(1);
    for (const auto& f : factors) modulus *= ueaspin::pow(f.irreducible, f.multiplicity);

    Polynomial sum;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      const Polynomial& pi = set.projectors[i];
      sum += pi;
      ok &= expect((pi * pi - pi) % modulus == Polynomial(), "idempotent");
      ok &= expect((ueaspin::pow(factors[i].irreducible, factors[i].multiplicity) * pi) % modulus == Polynomial(),
                   "factor annihilates its projector");
      for (std::size_t j = 0; j < factors.size(); ++j) {
        if (i != j) ok &= expect((pi * set.projectors[j]) % modulus == Polynomial(), "orthogonal");
      }
    }
    ok &= expect((sum - Polynomial::constant(1)) % modulus == Polynomial(), "resolution of the identity");
  }
  return ok;
}

bool e_eigenvalues() {
  bool ok = expect(uea::e_action(Element::scalar(1)).is_zero(), "E(1) = 0");
  for (Axis b : kAxes) {
    const Element j = Element::generator(b);
    ok &= expect(uea::e_action(j) == j * Rational(-2), "E(J) = -2J");
  }
  return ok;
}

bool left_action_identity() {
  bool ok = true;
  auto e = [](const Element& a) { return uea::e_action(a); };
  for (Axis v : kAxes) {
    auto l = [v](const Element& a) { return uea::left_mul(v, a); };
    // [E, L_v] and its nested brackets, as operators applied to x.
    auto c1 = [&](const Element& a) { return e(l(a)) - l(e(a)); };
    auto c2 = [&](const Element& a) { return e(c1(a)) - c1(e(a)); };
    auto c3 = [&](const Element& a) { return e(c2(a)) - c2(e(a)); };
    for (int trial = 0; trial < 100; ++trial) {
      const Element a = random_element(4, 6);
      const Element e2_l = e(e(l(a))) - l(e(e(a)));
      ok &= expect((c3(a) + e2_l * Rational(2)).is_zero(), "triple bracket identity");
    }
  }
  return ok;
}

bool multipole_suite() {
  bool ok = true;
  for (unsigned k = 0; k <= 6; ++k) {
    for (const auto& w : mp::sorted_words(k)) {
      const Element& t = mp::multipole(w);
      ok &= expect(uea::e_factor(k, t).is_zero(), "E_k T_k = 0");
      ok &= expect(mp::totally_symmetric(w), "symmetric");
      for (Axis v : kAxes) ok &= expect(mp::step_resolution_holds(v, w), "step resolution");
    }
    if (k >= 2) {
      for (const auto& rest : mp::sorted_words(k - 2)) {
        for (std::size_t p = 0; p + 1 < k; ++p) {
          for (std::size_t q = p + 1; q < k; ++q) ok &= expect(mp::contraction_vanishes(rest, p, q), "traceless");
        }
      }
    }
    ok &= expect(mp::image_rank(k) == 2 * k + 1, "rank 2k+1 at k = " + std::to_string(k));
  }
  return ok;
}

bool step_images() {
  bool ok = true;
  auto words = [](unsigned k) {
    if (k <= 3) return mp::all_words(k);
    std::vector<uea::FreeWord> sample;
    for (int i = 0; i < 12; ++i) sample.push_back(random_word(static_cast<int>(k)));
    return sample;
  };
  for (unsigned k = 1; k <= 5; ++k) {
    for (const auto& w : words(k)) {
      for (Axis a : kAxes) {
        ok &= expect(mp::verify_step_down_image(k, a, w), "step-down image");
        ok &= expect(mp::verify_step_level_image(k, a, w), "step-level image");
        ok &= expect(mp::verify_right_step_identities(k, a, w), "right multiplication");
      }
    }
  }
  return ok;
}

bool spin_algebras() {
  bool ok = true;
  const std::array<Rational, 5> casimir{Rational(0), Rational(-3, 4), Rational(-2), Rational(-15, 4), Rational(-6)};
  for (unsigned two_s = 0; two_s <= 4; ++two_s) {
    const auto& t = sa::spin_algebra(two_s);
    const std::size_t d = t.dimension();
    ok &= expect(d == (two_s + 1) * (two_s + 1), "dimension");
    ok &= expect(sa::quotient_rank(two_s) == d, "quotient rank");
    if (two_s <= 3) {
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
          for (std::size_t l = 0; l < d; ++l) ok &= expect(sa::associative(t, i, j, l), "associative");
    } else {
      for (int trial = 0; trial < 500; ++trial) {
        auto pick = [d] { return static_cast<std::size_t>(uniform_int(0, static_cast<int>(d) - 1)); };
        ok &= expect(sa::associative(t, pick(), pick(), pick()), "associative (sampled)");
      }
    }
    ueaspin::RationalVector c(d);
    for (Axis a : kAxes) {
      const auto sq = t.multiply(t.generator(a), t.generator(a));
      for (std::size_t i = 0; i < d; ++i) c[i] += sq[i];
    }
    ueaspin::RationalVector expected = t.unit(0);
    for (auto& r : expected) r *= casimir[two_s];
    ok &= expect(c == expected, "Casimir scalar at 2s = " + std::to_string(two_s));
    ok &= expect(sa::casimir_scalar_check(two_s), "Casimir scalar in U");
    for (Axis a : kAxes) ok &= expect(sa::eigenspectrum_check(two_s, a), "eigenspectrum");
    ok &= expect(sa::top_multipole_vanishes(two_s), "top multipole vanishes");
    if (two_s >= 1) ok &= expect(sa::casimir_factor_identity_check(two_s), "Casimir factor identity");
  }
  return ok;
}

bool clifford_kemmer() {
  bool ok = expect(sa::clifford_check(sa::spin_algebra(1)), "Clifford (exact)");
  ok &= expect(sa::kemmer_check(sa::spin_algebra(2)), "Kemmer (exact)");
  ok &= expect(oracle::clifford_deviation() < 1e-10, "Clifford (matrices)");
  ok &= expect(oracle::kemmer_deviation() < 1e-10, "Kemmer (matrices)");
  return ok;
}

bool oracle_agreement() {
  bool ok = true;
  for (unsigned two_s = 0; two_s <= 4; ++two_s) {
    ok &= expect(oracle::compare_structure_constants(sa::spin_algebra(two_s), 1e-10).pass, "structure constants");
    for (unsigned k = 0; k <= two_s; ++k) ok &= expect(oracle::image_rank(k, two_s) == 2 * k + 1, "matrix rank");
    ok &= expect(oracle::image_rank(two_s + 1, two_s) == 0, "top matrix rank 0");
  }
  return ok;
}

struct Run {
  int exit_code = -1;
  std::string output;
};

Run run_tool(const std::string& args) {
  Run r;
  const std::string command = "\"" + g_tool + "\" " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) return r;
  std::array<char, 4096> buffer{};
  std::size_t n;
  while ((n = std::fread(buffer.data(), 1, buffer.size(), pipe)) > 0) r.output.append(buffer.data(), n);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool cli_suite() {
  bool ok = expect(run_tool("verify --two-s 4 --oracle").exit_code == 0, "verify --two-s 4 --oracle");
  const std::array<std::pair<const char*, const char*>, 4> formats{
      {{"text", "txt"}, {"json", "json"}, {"latex", "tex"}, {"csv", "csv"}}};
  for (const auto& [format, ext] : formats) {
    const Run m = run_tool(std::string("multipole-table --k-max 4 --format ") + format);
    ok &= expect(m.exit_code == 0 && m.output == read_file(g_golden / (std::string("multipole_table_k4.") + ext)),
                 std::string("multipole-table golden ") + format);
    const Run s = run_tool(std::string("spin-table --two-s 2 --format ") + format);
    ok &= expect(s.exit_code == 0 && s.output == read_file(g_golden / (std::string("spin_table_2s2.") + ext)),
                 std::string("spin-table golden ") + format);
  }
  return ok;
}

struct Criterion {
  int number;
  std::string name;
  double budget_seconds;
  std::function<bool()> run;
};

}  // namespace

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: acceptance <ueaspin> <golden-dir>\n";
    return 2;
  }
  g_tool = argv[1];
  g_golden = argv[2];

  const std::vector<Criterion> criteria{
      {1, "projector congruences, 50 random coprime factorizations", 5, projector_suite},
      {2, "E eigenvalues on 1 and J_b", 1, e_eigenvalues},
      {3, "left action identity on 100 random elements per generator", 30, left_action_identity},
      {4, "multipole suite, k <= 6", 120, multipole_suite},
      {5, "step-image and right-multiplication formulas, k <= 5", 120, step_images},
      {6, "spin algebras, 2s <= 4", 300, spin_algebras},
      {7, "Clifford and Kemmer identities", 1, clifford_kemmer},
      {8, "oracle agreement, 2s <= 4", 60, oracle_agreement},
      {9, "CLI verify and golden files", 300, cli_suite},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = c.run();
    } catch (const std::exception& e) {
      std::cerr << "  exception: " << e.what() << '\n';
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_budget = seconds < c.budget_seconds;
    const bool pass = ok && in_budget;
    if (!pass) ++failed;
    std::printf("%s  %d  %s  [%.2fs / %.0fs%s]\n", pass ? "PASS" : "FAIL", c.number, c.name.c_str(), seconds,
                c.budget_seconds, in_budget ? "" : ", over budget");
    std::fflush(stdout);
  }
  std::printf("%zu criteria, %d failed\n", criteria.size(), failed);
  return failed == 0 ? 0 : 1;
}
