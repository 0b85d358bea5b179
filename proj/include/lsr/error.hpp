#ifndef LSR_ERROR_HPP
#define LSR_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace lsr {

enum class ErrorCode {
  DomainError,
  DegenerateInstance,
  OverlappingIntervals,
  RankDeficient,
  SingularMatrix,
  DuplicateNodes,
  BudgetExceeded,
  PreconditionUnmet,
  TooFewSamples,
  ConvergenceFailure,
  SupportsOutsideInterval,
  DegenerateNodes,
  VerificationFailed,
  ConfigError,
  DegenerateData,
  InvalidArgument,
  IoError,
};

std::string_view to_string(ErrorCode code);

/// Exception thrown by every toolkit operation; carries a machine-readable code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace lsr

#endif  // LSR_ERROR_HPP
