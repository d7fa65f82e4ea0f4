#include <sstream>

#include "ueaspin/cli.hpp"
#include "ueaspin/uea_json.hpp"

namespace ueaspin::cli {

using multipole::multipole_basis;
using spinalg::SpinAlgebraTable;

namespace {

std::string multipole_label(unsigned k, const uea::FreeWord& w) {
  if (k == 0) return "T0";
  return "T" + std::to_string(k) + "(" + uea::word_string(w) + ")";
}

std::string multipole_latex(unsigned k, const uea::FreeWord& w) {
  std::string out = "T_{" + std::to_string(k) + "}";
  if (k == 0) return out;
  out += "(";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0) out += " \\otimes ";
    out += std::string("J_") + uea::axis_name(w[i]);
  }
  return out + ")";
}

std::string rational_latex(const Rational& r) {
  if (r.is_integer()) return r.to_string();
  const std::string sign = r.sign() < 0 ? "-" : "";
  std::string num = r.numerator_string();
  if (!num.empty() && num.front() == '-') num.erase(0, 1);
  return sign + "\\frac{" + num + "}{" + r.denominator_string() + "}";
}

// "c1 a + c2 b - ..." with unit coefficients dropped.
struct Term {
  Rational c;
  std::string label;
};

std::string linear_combination(const std::vector<Term>& terms, bool latex) {
  if (terms.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const Rational& c = terms[i].c;
    const bool negative = c.sign() < 0;
    const Rational mag = negative ? -c : c;
    if (i == 0) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (mag != Rational(1)) out += (latex ? rational_latex(mag) + " " : mag.to_string() + "*");
    out += terms[i].label;
  }
  return out;
}

std::vector<Term> spin_terms(const SpinAlgebraTable& t, const RationalVector& v, bool latex) {
  std::vector<Term> out;
  for (std::size_t l = 0; l < v.size(); ++l) {
    if (v[l].is_zero()) continue;
    const auto& b = t.basis()[l];
    const auto& w = multipole_basis(b.level).components[b.component].indices;
    out.push_back({v[l], latex ? multipole_latex(b.level, w) : multipole_label(b.level, w)});
  }
  return out;
}

std::string spin_label(const SpinAlgebraTable& t, std::size_t i, bool latex) {
  const auto& b = t.basis()[i];
  const auto& w = multipole_basis(b.level).components[b.component].indices;
  return latex ? multipole_latex(b.level, w) : multipole_label(b.level, w);
}

std::string decomposition_label(const spinalg::CentralEntry& e, bool latex) {
  const auto& w = multipole_basis(e.level).components.at(e.component).indices;
  std::string out;
  if (e.casimir_power > 0) {
    out = "C";
    if (e.casimir_power > 1) out += latex ? "^{" + std::to_string(e.casimir_power) + "}" : "^" + std::to_string(e.casimir_power);
    if (e.level == 0) return out;
    out += latex ? " " : "*";
  }
  return out + (latex ? multipole_latex(e.level, w) : multipole_label(e.level, w));
}

}  // namespace

OutputFormat parse_format(std::string_view name) {
  if (name == "text") return OutputFormat::text;
  if (name == "json") return OutputFormat::json;
  if (name == "latex") return OutputFormat::latex;
  if (name == "csv") return OutputFormat::csv;
  throw UsageError("unknown format '" + std::string(name) + "' (expected text, json, latex or csv)");
}

std::string format_name(OutputFormat f) {
  switch (f) {
    case OutputFormat::text:
      return "text";
    case OutputFormat::json:
      return "json";
    case OutputFormat::latex:
      return "latex";
    case OutputFormat::csv:
      return "csv";
  }
  return "?";
}

nlohmann::json multipole_table_json(unsigned k_max) {
  nlohmann::json levels = nlohmann::json::array();
  for (unsigned k = 0; k <= k_max; ++k) {
    nlohmann::json components = nlohmann::json::array();
    for (const auto& c : multipole_basis(k).components) {
      components.push_back({{"indices", uea::word_string(c.indices)}, {"expansion", uea::to_json(c.expansion)}});
    }
    levels.push_back({{"k", k}, {"components", components}});
  }
  return {{"k_max", k_max}, {"levels", levels}};
}

std::vector<multipole::MultipoleBasis> multipole_table_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("levels") || !j.at("levels").is_array()) {
    throw std::invalid_argument("multipole_table_from_json: expected {\"levels\": [...]}");
  }
  std::vector<multipole::MultipoleBasis> out;
  for (const auto& level : j.at("levels")) {
    if (!level.contains("k") || !level.at("k").is_number_unsigned() || !level.contains("components")) {
      throw std::invalid_argument("multipole_table_from_json: level needs \"k\" and \"components\"");
    }
    multipole::MultipoleBasis basis;
    basis.level = level.at("k").get<unsigned>();
    for (const auto& c : level.at("components")) {
      if (!c.contains("indices") || !c.at("indices").is_string() || !c.contains("expansion")) {
        throw std::invalid_argument("multipole_table_from_json: component needs \"indices\" and \"expansion\"");
      }
      const uea::FreeWord w = uea::parse_word(c.at("indices").get<std::string>());
      if (w.size() != basis.level) throw std::invalid_argument("multipole_table_from_json: index count != k");
      basis.components.push_back({basis.level, w, uea::element_from_json(c.at("expansion"))});
    }
    out.push_back(std::move(basis));
  }
  return out;
}

std::string render_multipole_table(unsigned k_max, OutputFormat f) {
  std::ostringstream os;
  switch (f) {
    case OutputFormat::json:
      os << multipole_table_json(k_max).dump(2) << '\n';
      break;
    case OutputFormat::text:
      os << "multipole images, k = 0.." << k_max << '\n';
      for (unsigned k = 0; k <= k_max; ++k) {
        const auto& comps = multipole_basis(k).components;
        os << "\nk = " << k << " (" << comps.size() << " components)\n";
        for (const auto& c : comps) os << multipole_label(k, c.indices) << " = " << c.expansion.to_string() << '\n';
      }
      break;
    case OutputFormat::latex:
      os << "% multipole images, k = 0.." << k_max << '\n';
      os << "\\section*{Images of the multipoles}\n";
      for (unsigned k = 0; k <= k_max; ++k) {
        const auto& comps = multipole_basis(k).components;
        os << "\\subsection*{$k = " << k << "$}\n\\begin{align*}\n";
        for (std::size_t i = 0; i < comps.size(); ++i) {
          os << "  " << multipole_latex(k, comps[i].indices) << " &= " << comps[i].expansion.to_latex();
          os << (i + 1 < comps.size() ? " \\\\\n" : "\n");
        }
        os << "\\end{align*}\n";
      }
      break;
    case OutputFormat::csv:
      os << "k,indices,ex,ey,ez,c\n";
      for (unsigned k = 0; k <= k_max; ++k) {
        for (const auto& c : multipole_basis(k).components) {
          for (const auto& [m, coeff] : c.expansion.terms()) {
            os << k << ',' << uea::word_string(c.indices) << ',' << m.exponents[0] << ',' << m.exponents[1] << ','
               << m.exponents[2] << ',' << coeff.to_fraction_string() << '\n';
          }
        }
      }
      break;
  }
  return os.str();
}

std::string render_spin_table(const SpinAlgebraTable& t, OutputFormat f) {
  std::ostringstream os;
  const std::size_t dim = t.dimension();
  switch (f) {
    case OutputFormat::json:
      os << spinalg::to_json(t).dump(2) << '\n';
      break;
    case OutputFormat::text:
      os << "spin algebra 2s = " << t.two_s() << ", dimension " << dim << "\n\nbasis\n";
      for (std::size_t i = 0; i < dim; ++i) os << "  e" << i << " = " << spin_label(t, i, false) << '\n';
      os << "\nproducts\n";
      for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
          os << "  " << spin_label(t, i, false) << " * " << spin_label(t, j, false) << " = "
             << linear_combination(spin_terms(t, t.product(i, j), false), false) << '\n';
        }
      }
      break;
    case OutputFormat::latex:
      os << "% spin algebra 2s = " << t.two_s() << ", dimension " << dim << '\n';
      os << "\\section*{Multiplication table, $2s = " << t.two_s() << "$}\n\\begin{align*}\n";
      for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
          os << "  " << spin_label(t, i, true) << "\\," << spin_label(t, j, true) << " &= "
             << linear_combination(spin_terms(t, t.product(i, j), true), true);
          os << (i + 1 < dim || j + 1 < dim ? " \\\\\n" : "\n");
        }
      }
      os << "\\end{align*}\n";
      break;
    case OutputFormat::csv:
      os << "i,j,l,left,right,result,c\n";
      for (const auto& c : t.constants()) {
        os << c.i << ',' << c.j << ',' << c.l << ',' << spin_label(t, c.i, false) << ',' << spin_label(t, c.j, false)
           << ',' << spin_label(t, c.l, false) << ',' << c.c.to_fraction_string() << '\n';
      }
      break;
  }
  return os.str();
}

std::string render_decomposition(const spinalg::CentralCoefficients& c, OutputFormat f) {
  std::ostringstream os;
  switch (f) {
    case OutputFormat::json: {
      nlohmann::json rows = nlohmann::json::array();
      for (const auto& [e, coeff] : c) {
        rows.push_back({{"m", e.casimir_power},
                        {"n", e.level},
                        {"component", e.component},
                        {"indices", uea::word_string(multipole_basis(e.level).components.at(e.component).indices)},
                        {"c", coeff.to_fraction_string()}});
      }
      os << rows.dump(2) << '\n';
      break;
    }
    case OutputFormat::text:
      if (c.empty()) os << "0\n";
      for (const auto& [e, coeff] : c) {
        os << "(" << e.casimir_power << ", " << e.level << ", "
           << multipole_label(e.level, multipole_basis(e.level).components.at(e.component).indices)
           << "): " << coeff.to_string() << '\n';
      }
      break;
    case OutputFormat::latex: {
      std::vector<Term> terms;
      for (const auto& [e, coeff] : c) terms.push_back({coeff, decomposition_label(e, true)});
      os << linear_combination(terms, true) << '\n';
      break;
    }
    case OutputFormat::csv:
      os << "m,n,component,indices,c\n";
      for (const auto& [e, coeff] : c) {
        os << e.casimir_power << ',' << e.level << ',' << e.component << ','
           << uea::word_string(multipole_basis(e.level).components.at(e.component).indices) << ','
           << coeff.to_fraction_string() << '\n';
      }
      break;
  }
  return os.str();
}

}  // namespace ueaspin::cli
