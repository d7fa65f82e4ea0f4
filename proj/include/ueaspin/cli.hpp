#pragma once

// Library side of the ueaspin command-line tool: expression parsing, table
// rendering and the four subcommands. Each command returns its exit code and
// document instead of printing, so tests can drive it directly.

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "ueaspin/multipole.hpp"
#include "ueaspin/spinalg.hpp"

namespace ueaspin::cli {

enum class OutputFormat { text, json, latex, csv };

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Bad arguments or input; maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public UsageError {
 public:
  ParseError(const std::string& message, std::size_t position);
  [[nodiscard]] std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

OutputFormat parse_format(std::string_view name);
std::string format_name(OutputFormat f);

/// Grammar: sums and differences of products of Jx, Jy, Jz, rationals
/// (n or n/d), parenthesized groups and non-negative integer powers (^).
/// Positions in errors are 0-based character offsets.
uea::Element parse_expression(std::string_view text);

struct Caps {
  unsigned degree = 8;     ///< largest PBW degree handled by decompose
  unsigned k_max = 6;      ///< degree - 2
  unsigned two_s_max = 4;  ///< degree / 2
};

inline constexpr const char* kDegreeCapVariable = "UEASPIN_DEGREE_CAP";

Caps caps_for_degree(unsigned degree);
/// Reads UEASPIN_DEGREE_CAP; throws UsageError when it is not a number.
Caps caps_from_environment();

// Rendering.

std::string render_multipole_table(unsigned k_max, OutputFormat f);
std::string render_spin_table(const spinalg::SpinAlgebraTable& t, OutputFormat f);
std::string render_decomposition(const spinalg::CentralCoefficients& c, OutputFormat f);

nlohmann::json multipole_table_json(unsigned k_max);
/// Inverse of multipole_table_json; throws std::invalid_argument.
std::vector<multipole::MultipoleBasis> multipole_table_from_json(const nlohmann::json& j);

// Verification suite.

struct Check {
  std::string name;
  std::function<bool()> run;
};

struct VerifyOptions {
  unsigned two_s_max = 4;
  unsigned k_max = 6;
  bool oracle = false;
};

std::vector<Check> verification_suite(const VerifyOptions& options);

// Commands.

struct CommandResult {
  int exit_code = kExitOk;
  std::string output;  ///< the rendered document or report
  std::string error;   ///< message for stderr
};

CommandResult cmd_multipole_table(unsigned k_max, OutputFormat f, const Caps& caps);
CommandResult cmd_spin_table(unsigned two_s, OutputFormat f, const Caps& caps);
CommandResult cmd_verify(const VerifyOptions& options, const Caps& caps);
CommandResult cmd_decompose(std::string_view expression, OutputFormat f, const Caps& caps);

}  // namespace ueaspin::cli
