#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ueaspin/cli.hpp"
#include "ueaspin/oracle.hpp"

namespace py = pybind11;
namespace cli = ueaspin::cli;
namespace spinalg = ueaspin::spinalg;

namespace {

cli::OutputFormat format_of(const std::string& name) { return cli::parse_format(name); }

py::tuple decomposition_row(const spinalg::CentralEntry& e, const ueaspin::Rational& c) {
  const auto& w = ueaspin::multipole::multipole_basis(e.level).components.at(e.component).indices;
  return py::make_tuple(e.casimir_power, e.level, ueaspin::uea::word_string(w), c.to_fraction_string());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact multipoles of U(so(3)) and the spin algebras";

  py::register_exception<cli::ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<cli::UsageError>(m, "UsageError", PyExc_ValueError);

  m.def("normal_form", [](const std::string& expr) { return cli::parse_expression(expr).to_string(); },
        py::arg("expression"), "PBW normal form of an expression in Jx, Jy, Jz.");
  m.def("multipole",
        [](const std::string& indices) {
          return ueaspin::multipole::multipole(ueaspin::uea::parse_word(indices)).to_string();
        },
        py::arg("indices"), "PBW expansion of T_k(J_a ... J_b), e.g. multipole(\"xy\").");
  m.def("multipole_rank", &ueaspin::multipole::image_rank, py::arg("k"));
  m.def("decompose",
        [](const std::string& expr) {
          py::list rows;
          for (const auto& [e, c] : spinalg::central_multipole_reduce(cli::parse_expression(expr))) {
            rows.append(decomposition_row(e, c));
          }
          return rows;
        },
        py::arg("expression"), "Rows (m, n, indices, coefficient) of the expansion over C^m T_n.");
  m.def("multipole_table",
        [](unsigned k_max, const std::string& format) { return cli::render_multipole_table(k_max, format_of(format)); },
        py::arg("k_max"), py::arg("format") = "json");
  m.def("spin_table",
        [](unsigned two_s, const std::string& format) {
          return cli::render_spin_table(spinalg::spin_algebra(two_s), format_of(format));
        },
        py::arg("two_s"), py::arg("format") = "json");
  m.def("spin_dimension", [](unsigned two_s) { return spinalg::spin_algebra(two_s).dimension(); }, py::arg("two_s"));
  m.def("oracle_max_deviation",
        [](unsigned two_s) {
          return ueaspin::oracle::compare_structure_constants(spinalg::spin_algebra(two_s)).max_deviation;
        },
        py::arg("two_s"));
  m.def("verify",
        [](unsigned two_s_max, unsigned k_max, bool oracle) {
          py::gil_scoped_release release;
          const auto r = cli::cmd_verify({two_s_max, k_max, oracle}, cli::caps_from_environment());
          return std::make_pair(r.exit_code, r.output);
        },
        py::arg("two_s_max") = 4, py::arg("k_max") = 6, py::arg("oracle") = false,
        "Run the identity checks; returns (exit_code, report).");
}
