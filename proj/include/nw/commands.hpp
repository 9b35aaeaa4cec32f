#pragma once
// Command layer behind nwtool: configuration, dispatch and JSON-lines reports.

#include "nw/numeric.hpp"
#include "nw/params.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace nw {

struct RunConfig {
  std::string command;
  int r = 2;
  int n = 3;
  std::optional<std::vector<Rational>> u;  // empty means the default generic choice
  unsigned precision_bits = 256;
  std::optional<int> truncation;
  std::string out;
  std::string lambda;
  int A = 10;

  /// Throws std::invalid_argument on r < 1, n < 0, precision < 64 or a u of the wrong length.
  void validate() const;
  /// Keys present in j replace the corresponding fields.
  void apply_json(const nlohmann::json& j);
  nlohmann::json to_json() const;
};

/// The u list, or default_u(r, max(n, 1)).
std::vector<Rational> resolved_u(const RunConfig& cfg);
ParamSet resolve_params(const RunConfig& cfg);

struct CommandResult {
  std::vector<nlohmann::json> records;  // the last one is the summary
  bool pass = true;
};

CommandResult cmd_counts(const RunConfig& cfg);
CommandResult cmd_verify(const RunConfig& cfg);
CommandResult cmd_gram(const RunConfig& cfg);
CommandResult cmd_cellrank(const RunConfig& cfg);
CommandResult cmd_omega(const RunConfig& cfg);
CommandResult run_command(const RunConfig& cfg);

/// Full command-line entry point. Returns 0 on pass, 1 on failure, 2 on usage errors.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace nw
