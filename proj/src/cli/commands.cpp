#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <random>
#include <sstream>

#include "ueaspin/cli.hpp"
#include "ueaspin/oracle.hpp"

namespace ueaspin::cli {

using multipole::FreeWord;
using multipole::StepKind;
using uea::Axis;
using uea::Element;
using uea::kAxes;

namespace {

// F(J_b) X = sum_{c,a} eps_{bca} J_c X J_a
Element f_operator(Axis b, const Element& x) {
  Element out;
  for (Axis c : kAxes) {
    for (Axis a : kAxes) {
      const int eps = uea::structure_constant(b, c, a);
      if (eps != 0) out.add_scaled(uea::right_mul(a, uea::left_mul(c, x)), Rational(eps));
    }
  }
  return out;
}

std::vector<Element> sample_monomials(unsigned max_degree) {
  const uea::MonomialIndex idx(max_degree);
  std::vector<Element> out;
  for (std::size_t i = 0; i < idx.size(); ++i) out.push_back(Element::monomial(idx.monomial(i)));
  return out;
}

bool for_each_sample(const std::function<bool(Axis, const Element&)>& body) {
  static const std::vector<Element> samples = sample_monomials(3);
  for (const Element& x : samples) {
    for (Axis v : kAxes) {
      if (!body(v, x)) return false;
    }
  }
  return true;
}

Element e_op(const Element& x) { return uea::e_action(x); }

std::vector<FreeWord> step_image_words(unsigned k) {
  return k <= 3 ? multipole::all_words(k) : multipole::sorted_words(k);
}

std::string str(unsigned n) { return std::to_string(n); }

void add_uea_checks(std::vector<Check>& out) {
  out.push_back({"E(1) = 0 and E(J_b) = -2 J_b", [] {
                   if (!e_op(Element::scalar(1)).is_zero()) return false;
                   for (Axis b : kAxes) {
                     if (e_op(Element::generator(b)) != Element::generator(b) * Rational(-2)) return false;
                   }
                   return true;
                 }});
  out.push_back({"ad_v = L_v - R_v", [] {
                   return for_each_sample([](Axis v, const Element& x) {
                     return uea::adjoint(v, x) == uea::left_mul(v, x) - uea::right_mul(v, x);
                   });
                 }});
  out.push_back({"ad_(a x b) = ad_a ad_b - ad_b ad_a", [] {
                   return for_each_sample([](Axis a, const Element& x) {
                     for (Axis b : kAxes) {
                       const uea::Cross ab = uea::cross(a, b);
                       const Element lhs = ab.sign == 0 ? Element() : uea::adjoint(ab.axis, x) * Rational(ab.sign);
                       if (lhs != uea::adjoint(a, uea::adjoint(b, x)) - uea::adjoint(b, uea::adjoint(a, x))) return false;
                     }
                     return true;
                   });
                 }});
  out.push_back({"E = 2 L_C - 2 sum_a L_a R_a", [] {
                   return for_each_sample(
                       [](Axis, const Element& x) { return e_op(x) == uea::e_action_via_left_right(x); });
                 }});
  out.push_back({"[E, L_b] = -2 F(J_b)", [] {
                   return for_each_sample([](Axis b, const Element& x) {
                     return e_op(uea::left_mul(b, x)) - uea::left_mul(b, e_op(x)) == f_operator(b, x) * Rational(-2);
                   });
                 }});
  out.push_back({"[E, L_a] = [E, R_a]", [] {
                   return for_each_sample([](Axis a, const Element& x) {
                     return e_op(uea::left_mul(a, x)) - uea::left_mul(a, e_op(x)) ==
                            e_op(uea::right_mul(a, x)) - uea::right_mul(a, e_op(x));
                   });
                 }});
  out.push_back({"[E, F(J_b)] = L_b E + E R_b", [] {
                   return for_each_sample([](Axis b, const Element& x) {
                     return e_op(f_operator(b, x)) - f_operator(b, e_op(x)) ==
                            uea::left_mul(b, e_op(x)) + e_op(uea::right_mul(b, x));
                   });
                 }});
  out.push_back({"[E,[E,[E,L_v]]] + 2[E^2, L_v] = 0", [] {
                   return for_each_sample([](Axis v, const Element& x) {
                     auto L = [v](const Element& y) { return uea::left_mul(v, y); };
                     const Element e1 = e_op(x), e2 = e_op(e1), e3 = e_op(e2);
                     const Element triple = e_op(e_op(e_op(L(x)))) - e_op(e_op(L(e1))) * Rational(3) +
                                            e_op(L(e2)) * Rational(3) - L(e3);
                     const Element square = e_op(e_op(L(x))) - L(e2);
                     return (triple + square * Rational(2)).is_zero();
                   });
                 }});
}

void add_projector_checks(std::vector<Check>& out, unsigned k_max) {
  out.push_back({"Bezout projector congruences for the step polynomials, k = 0.." + str(k_max), [k_max] {
                   for (unsigned k = 0; k <= k_max; ++k) {
                     if (!projector_congruences_hold(bezout_projectors(multipole::step_min_poly(k)))) return false;
                   }
                   return true;
                 }});
  out.push_back({"Bezout projector congruences for a rational rotation", [] {
                   const Polynomial x = Polynomial::x();
                   const Polynomial rot = x * x - x * Rational(6, 5) + Polynomial::constant(1);
                   return projector_congruences_hold(
                       bezout_projectors(FactoredMinPoly({{Polynomial::linear_root(1), 1}, {rot, 1}})));
                 }});
}

void add_multipole_checks(std::vector<Check>& out, unsigned k_max) {
  for (unsigned k = 0; k <= k_max; ++k) {
    const std::string at = ", k = " + str(k);
    out.push_back({"E_k T_k = 0" + at, [k] {
                     for (const auto& w : multipole::all_words(k)) {
                       if (!multipole::annihilation_holds(w)) return false;
                     }
                     return true;
                   }});
    out.push_back({"T_k totally symmetric" + at, [k] {
                     for (const auto& w : multipole::sorted_words(k)) {
                       if (!multipole::totally_symmetric(w)) return false;
                     }
                     return true;
                   }});
    if (k >= 2) {
      out.push_back({"T_k traceless in every slot pair" + at, [k] {
                       for (std::size_t q = 1; q < k; ++q) {
                         for (std::size_t p = 0; p < q; ++p) {
                           for (const auto& rest : multipole::all_words(k - 2)) {
                             if (!multipole::contraction_vanishes(rest, p, q)) return false;
                           }
                         }
                       }
                       return true;
                     }});
    }
    out.push_back({"dim Im T_k = 2k+1" + at, [k] { return multipole::image_rank(k) == 2 * k + 1; }});
    out.push_back({"L_v = D_v + Lambda_v + S+_v on T_k" + at, [k] {
                     for (const auto& w : multipole::sorted_words(k)) {
                       for (Axis v : kAxes) {
                         if (!multipole::step_resolution_holds(v, w)) return false;
                       }
                     }
                     return true;
                   }});
    out.push_back({"ad_u T_k = T_k ad_u for u = J_a, C" + at, [k] {
                     std::vector<Element> us{uea::casimir()};
                     for (Axis a : kAxes) us.push_back(Element::generator(a));
                     for (const auto& w : multipole::sorted_words(k)) {
                       for (const auto& u : us) {
                         if (!multipole::ad_commutation_check(k, u, w)) return false;
                       }
                     }
                     return true;
                   }});
  }
  for (unsigned m = 1; m <= std::min(k_max, 5u); ++m) {
    out.push_back({"cubic in E annihilates L_v T_m and is minimal, m = " + str(m), [m] {
                     for (const auto& w : multipole::sorted_words(m)) {
                       for (Axis v : kAxes) {
                         if (!multipole::cubic_annihilates(m, v, w)) return false;
                       }
                     }
                     return multipole::cubic_is_minimal(m);
                   }});
  }
}

void add_step_image_checks(std::vector<Check>& out, unsigned k_max) {
  const unsigned top = std::min(k_max, 5u);
  for (unsigned k = 1; k <= top; ++k) {
    const std::string at = ", k = " + str(k);
    out.push_back({(k == 1 ? "step-down dipole image C/3 delta_ab" : "step-down image through T_{k-1}") + at, [k] {
                     for (const auto& w : step_image_words(k)) {
                       for (Axis a : kAxes) {
                         if (!multipole::verify_step_down_image(k, a, w)) return false;
                       }
                     }
                     return true;
                   }});
    out.push_back({"step-level image (1/2) ad_a T_k" + at, [k] {
                     for (const auto& w : step_image_words(k)) {
                       for (Axis a : kAxes) {
                         if (!multipole::verify_step_level_image(k, a, w)) return false;
                       }
                     }
                     return true;
                   }});
  }
  for (unsigned k = 0; k <= top; ++k) {
    out.push_back({"right steps: D^R = D, S+^R = S+, Lambda^R = -Lambda, k = " + str(k), [k] {
                     for (const auto& w : step_image_words(k)) {
                       for (Axis v : kAxes) {
                         if (!multipole::verify_right_step_identities(k, v, w)) return false;
                       }
                     }
                     return true;
                   }});
  }
}

void add_spin_checks(std::vector<Check>& out, unsigned two_s_max) {
  for (unsigned two_s = 0; two_s <= two_s_max; ++two_s) {
    const std::string at = ", 2s = " + str(two_s);
    out.push_back({"dim S_s = (2s+1)^2" + at, [two_s] {
                     const auto& t = spinalg::spin_algebra(two_s);
                     return t.dimension() == (two_s + 1) * (two_s + 1) && spinalg::quotient_rank(two_s) == t.dimension();
                   }});
    out.push_back({"T0 is the two-sided identity" + at,
                   [two_s] { return spinalg::identity_element_check(spinalg::spin_algebra(two_s)); }});
    out.push_back({"associativity" + std::string(two_s <= 3 ? " (all triples)" : " (500 random triples)") + at,
                   [two_s] {
                     const auto& t = spinalg::spin_algebra(two_s);
                     const std::size_t dim = t.dimension();
                     if (two_s <= 3) {
                       for (std::size_t i = 0; i < dim; ++i) {
                         for (std::size_t j = 0; j < dim; ++j) {
                           for (std::size_t l = 0; l < dim; ++l) {
                             if (!spinalg::associative(t, i, j, l)) return false;
                           }
                         }
                       }
                       return true;
                     }
                     std::mt19937_64 rng(20240611 + two_s);
                     std::uniform_int_distribution<std::size_t> pick(0, dim - 1);
                     for (int n = 0; n < 500; ++n) {
                       if (!spinalg::associative(t, pick(rng), pick(rng), pick(rng))) return false;
                     }
                     return true;
                   }});
    out.push_back({"[T1(a), T1(b)] = eps_abc T1(c)" + at,
                   [two_s] { return spinalg::commutator_closure_check(spinalg::spin_algebra(two_s)); }});
    out.push_back({"Casimir acts as -k(k+2)/4" + at, [two_s] { return spinalg::casimir_scalar_check(two_s); }});
    out.push_back({"eigenspectrum polynomial of J_a vanishes" + at, [two_s] {
                     for (Axis a : kAxes) {
                       if (!spinalg::eigenspectrum_check(two_s, a)) return false;
                     }
                     return true;
                   }});
    out.push_back({"T_{2s+1} and T_{2s+2} vanish" + at, [two_s] { return spinalg::top_multipole_vanishes(two_s); }});
    out.push_back({"(4C + k(k+2)) T_k = 0" + at, [two_s] { return spinalg::casimir_factor_identity_check(two_s); }});
    out.push_back({"D_a S+_b T_2s = 0" + at, [two_s] {
                     for (Axis a : kAxes) {
                       for (Axis b : kAxes) {
                         if (!spinalg::stepdown_stepup_vanishes(two_s, a, b)) return false;
                       }
                     }
                     return true;
                   }});
  }
  if (two_s_max >= 1) {
    out.push_back({"Clifford: J_a J_b + J_b J_a = -(1/2) delta_ab in S_1/2",
                   [] { return spinalg::clifford_check(spinalg::spin_algebra(1)); }});
  }
  if (two_s_max >= 2) {
    out.push_back({"Kemmer: J_a J_b J_c + J_c J_b J_a = -(delta_ab J_c + delta_bc J_a) in S_1",
                   [] { return spinalg::kemmer_check(spinalg::spin_algebra(2)); }});
  }
}

void add_oracle_checks(std::vector<Check>& out, unsigned two_s_max) {
  for (unsigned two_s = 0; two_s <= two_s_max; ++two_s) {
    const std::string at = ", 2s = " + str(two_s);
    out.push_back({"oracle: structure constants match matrices" + at,
                   [two_s] { return oracle::compare_structure_constants(spinalg::spin_algebra(two_s)).pass; }});
    out.push_back({"oracle: matrix rank of Im T_k is 2k+1 for k <= 2s and 0 above" + at, [two_s] {
                     for (unsigned k = 0; k <= two_s; ++k) {
                       if (oracle::image_rank(k, two_s) != 2 * k + 1) return false;
                     }
                     return oracle::image_rank(two_s + 1, two_s) == 0;
                   }});
  }
  out.push_back({"oracle: Clifford identity for spin-1/2 matrices", [] { return oracle::clifford_deviation() < 1e-10; }});
  out.push_back({"oracle: Kemmer identity for spin-1 matrices", [] { return oracle::kemmer_deviation() < 1e-10; }});
}

std::string format_seconds(double s) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(2) << s << "s";
  return os.str();
}

CommandResult usage(const std::string& message) { return {kExitUsage, "", message}; }

}  // namespace

Caps caps_for_degree(unsigned degree) {
  if (degree < 2) throw UsageError("degree cap must be at least 2");
  return {degree, degree - 2, degree / 2};
}

Caps caps_from_environment() {
  const char* raw = std::getenv(kDegreeCapVariable);
  if (raw == nullptr || *raw == '\0') return caps_for_degree(8);
  const std::string value(raw);
  if (value.find_first_not_of("0123456789") != std::string::npos || value.size() > 3) {
    throw UsageError(std::string(kDegreeCapVariable) + " must be a small non-negative integer, got '" + value + "'");
  }
  return caps_for_degree(static_cast<unsigned>(std::stoul(value)));
}

std::vector<Check> verification_suite(const VerifyOptions& options) {
  std::vector<Check> out;
  add_projector_checks(out, options.k_max);
  add_uea_checks(out);
  add_multipole_checks(out, options.k_max);
  add_step_image_checks(out, options.k_max);
  add_spin_checks(out, options.two_s_max);
  if (options.oracle) add_oracle_checks(out, options.two_s_max);
  return out;
}

CommandResult cmd_multipole_table(unsigned k_max, OutputFormat f, const Caps& caps) {
  if (k_max > caps.k_max) return usage("--k-max " + str(k_max) + " exceeds the cap " + str(caps.k_max));
  return {kExitOk, render_multipole_table(k_max, f), ""};
}

CommandResult cmd_spin_table(unsigned two_s, OutputFormat f, const Caps& caps) {
  if (two_s > caps.two_s_max) return usage("--two-s " + str(two_s) + " exceeds the cap " + str(caps.two_s_max));
  return {kExitOk, render_spin_table(spinalg::spin_algebra(two_s), f), ""};
}

CommandResult cmd_verify(const VerifyOptions& options, const Caps& caps) {
  if (options.two_s_max > caps.two_s_max) {
    return usage("--two-s " + str(options.two_s_max) + " exceeds the cap " + str(caps.two_s_max));
  }
  if (options.k_max > caps.k_max) return usage("--k-max " + str(options.k_max) + " exceeds the cap " + str(caps.k_max));

  std::ostringstream report;
  std::size_t failed = 0;
  std::string first_failure;
  const auto checks = verification_suite(options);
  for (const auto& check : checks) {
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    std::string note;
    try {
      ok = check.run();
    } catch (const std::exception& e) {
      note = std::string(" (") + e.what() + ")";
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report << (ok ? "PASS  " : "FAIL  ") << check.name << "  [" << format_seconds(secs) << "]" << note << '\n';
    if (!ok && failed++ == 0) first_failure = check.name;
  }
  if (options.oracle) {
    double worst = 0.0;
    for (unsigned two_s = 0; two_s <= options.two_s_max; ++two_s) {
      worst = std::max(worst, oracle::compare_structure_constants(spinalg::spin_algebra(two_s)).max_deviation);
    }
    worst = std::max({worst, oracle::clifford_deviation(), oracle::kemmer_deviation()});
    report << "oracle max deviation: " << std::scientific << std::setprecision(3) << worst << '\n';
  }
  report << checks.size() << " checks, " << failed << " failed\n";
  if (failed > 0) return {kExitFailure, report.str(), "verification failed: " + first_failure};
  return {kExitOk, report.str(), ""};
}

CommandResult cmd_decompose(std::string_view expression, OutputFormat f, const Caps& caps) {
  Element x;
  try {
    x = parse_expression(expression);
  } catch (const ParseError& e) {
    return usage(e.what());
  }
  if (x.degree() > static_cast<int>(caps.degree)) {
    return usage("expression has degree " + std::to_string(x.degree()) + ", above the cap " + str(caps.degree));
  }
  const spinalg::CentralCoefficients c = spinalg::central_multipole_reduce(x);
  if (spinalg::reconstruct(c) != x) return {kExitFailure, "", "decompose: reconstruction does not match the input"};
  return {kExitOk, render_decomposition(c, f), ""};
}

}  // namespace ueaspin::cli
