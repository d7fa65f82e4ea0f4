// ueaspin: regenerate multipole and spin-algebra tables, run the identity
// checks, and decompose expressions into central multiples of multipoles.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "ueaspin/cli.hpp"

namespace {

using namespace ueaspin::cli;

int emit(const CommandResult& result, const std::string& out_path) {
  if (!result.error.empty()) std::cerr << "ueaspin: " << result.error << '\n';
  if (out_path.empty() || result.output.empty()) {
    std::cout << result.output;
  } else {
    std::ofstream file(out_path, std::ios::binary);
    if (!file) {
      std::cerr << "ueaspin: cannot write " << out_path << '\n';
      return kExitUsage;
    }
    file << result.output;
  }
  return result.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact tables and identity checks for U(so(3)) and the spin algebras"};
  app.require_subcommand(1);

  std::string format = "text";
  std::string out_path;
  unsigned k_max = 4;
  unsigned two_s = 1;
  bool with_oracle = false;
  std::string expression;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "json", "latex", "csv"}))
        ->capture_default_str();
    sub->add_option("--out", out_path, "Write the document to FILE instead of stdout");
  };

  auto* multipole_table = app.add_subcommand("multipole-table", "Images of T_k for k = 0..k-max");
  multipole_table->add_option("--k-max", k_max, "Largest multipole level")->capture_default_str();
  add_common(multipole_table);

  auto* spin_table = app.add_subcommand("spin-table", "Structure constants of S_s");
  spin_table->add_option("--two-s", two_s, "2s")->required();
  add_common(spin_table);

  VerifyOptions verify_options;
  auto* verify = app.add_subcommand("verify", "Run every identity check");
  verify->add_option("--two-s,--two-s-max", verify_options.two_s_max, "Largest 2s to check")->capture_default_str();
  verify->add_option("--k-max", verify_options.k_max, "Largest multipole level to check")->capture_default_str();
  verify->add_flag("--oracle", with_oracle, "Also compare against spin matrices");
  verify->add_option("--out", out_path, "Write the report to FILE instead of stdout");

  auto* decompose = app.add_subcommand("decompose", "Expand an expression over C^m T_n");
  decompose->add_option("expression", expression, "e.g. \"Jx*Jy - Jy*Jx\"")->required();
  add_common(decompose);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    const Caps caps = caps_from_environment();
    const OutputFormat f = parse_format(format);
    if (*multipole_table) return emit(cmd_multipole_table(k_max, f, caps), out_path);
    if (*spin_table) return emit(cmd_spin_table(two_s, f, caps), out_path);
    if (*verify) {
      verify_options.oracle = with_oracle;
      return emit(cmd_verify(verify_options, caps), out_path);
    }
    if (*decompose) return emit(cmd_decompose(expression, f, caps), out_path);
  } catch (const UsageError& e) {
    std::cerr << "ueaspin: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "ueaspin: internal error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}
