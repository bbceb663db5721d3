// Command-line front end. Every command builds a JSON document
//   {"n", "characteristic", "max_degree", "data", "checks"}
// which is then rendered as JSON, an aligned text table or LaTeX.
#ifndef EXTLINE_CLI_HPP_
#define EXTLINE_CLI_HPP_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace extline::cli {

enum class Format { Json, Table, Latex };

struct RunConfig {
  int n = 0;
  std::uint32_t characteristic = 2;
  int max_degree = -1;  // -1: 4N
  std::uint64_t seed = 1;
  Format format = Format::Json;
  std::optional<std::string> out;
};

/// Rejected configuration; the message names the offending flag.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum ExitCode { kPass = 0, kVerificationFailure = 1, kUsageError = 2 };

/// Fills in the default degree bound and validates n, characteristic and degree.
RunConfig validated(RunConfig config);

nlohmann::json cmd_ext_table(const RunConfig& config);
nlohmann::json cmd_poincare(const RunConfig& config, std::optional<int> i, std::optional<int> j);
nlohmann::json cmd_resolve(const RunConfig& config, int i, std::optional<int> corrupt_loop_sign,
                           std::optional<int> corrupt_sign);
nlohmann::json cmd_verify(const RunConfig& config, const std::string& suite);
nlohmann::json cmd_gamma_dims(const RunConfig& config, const std::optional<std::string>& drop_family);
nlohmann::json cmd_yoneda_product(const RunConfig& config, const std::string& first, const std::string& second);

/// 0 when every check passed, 1 otherwise.
int exit_code(const nlohmann::json& doc);

std::string render(const nlohmann::json& doc, Format format);

/// Parses argv, runs the command and writes the rendering to `out` (or --out).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace extline::cli

#endif  // EXTLINE_CLI_HPP_
