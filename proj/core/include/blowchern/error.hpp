#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace blowchern {

enum class ErrorKind {
  table_mismatch,
  not_a_unit,
  not_divisible,
  grading_violation,
  empty_bundle,
  no_degree_map,
  rank_underflow,
  ring_mismatch,
  inconsistent_scenario,
  no_pushforward,
  no_pullback,
  context_mismatch,
  invalid_argument,
  parse,
  internal,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries a kind so callers (and the
/// CLI exit-code logic) can branch without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace blowchern
