#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "blowchern/operators.hpp"

namespace blowchern::cli {

enum class Command { verify, compute, expand };
enum class Format { text, json };

struct CliConfig {
  Command command = Command::verify;
  int max_codim = 6;
  std::optional<int> max_rank;  // defaults to max_codim + 3
  std::optional<std::string> scenario_path;
  std::string formula;
  std::optional<int> codim;
  int excess = 0;
  std::optional<int> max_degree;
  Twist twist = Twist::MinusExceptional;
  Format format = Format::text;
};

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kCheckFailed = 1;
inline constexpr int kConfigError = 2;

/// Parses argv and dispatches. Help goes to `out` and returns 0.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Throws Error(invalid_argument) for inconsistent settings.
void validate(const CliConfig& cfg);

int run_verify(const CliConfig& cfg, std::ostream& out, std::ostream& err);
int run_compute(const CliConfig& cfg, std::ostream& out, std::ostream& err);
int run_expand(const CliConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace blowchern::cli
