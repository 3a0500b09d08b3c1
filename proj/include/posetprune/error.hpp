#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace posetprune {

enum class ErrorCode {
  duplicate_label,
  unknown_label,
  cycle_detected,
  empty_set,
  not_comparable,
  not_a_chain,
  too_large,
  member_not_subset,
  not_a_connectivity,
  not_conditionally_complete,
  precondition_violated,
  internal_order_violation,
  invalid_spec,
  parse_error,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so
/// callers (and the CLI's exit-code mapping) can branch without string
/// matching.
class PosetError : public std::runtime_error {
 public:
  PosetError(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Raised when the supplied relations are not antisymmetric. `cycle()` lists
/// the labels along one offending cycle, first label repeated at the end.
class CycleError : public PosetError {
 public:
  explicit CycleError(std::vector<std::string> cycle);

  const std::vector<std::string>& cycle() const noexcept { return cycle_; }

 private:
  std::vector<std::string> cycle_;
};

class ParseError : public PosetError {
 public:
  ParseError(std::size_t line, const std::string& message)
      : PosetError(ErrorCode::parse_error,
                   line == 0 ? message
                             : "line " + std::to_string(line) + ": " + message),
        line_(line) {}

  /// 1-based; 0 when the error is not tied to a line (JSON documents).
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace posetprune
