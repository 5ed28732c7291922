#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace loewner {

enum class ErrorCode {
  // input shape and validation
  NonSquare,
  NotHermitianWithinTolerance,
  DimensionMismatch,
  AmbientMismatch,
  TrivialSubspace,
  NotPositiveSemidefinite,
  NotCommutingFamily,
  NotLowerBound,
  NotUnitVector,
  SingularTransform,
  NotMaximalForJZero,
  InfimumExists,
  InvalidTolerance,
  ParseError,
  ValidationError,
  // numerical breakdown
  ConvergenceFailure,
  RangeConditionViolated,
  AngularExtractionFailed,
  DistinctnessFailure,
  NumericalFailure,
  // command line
  UsageError,
  UnknownFixture,
  UnknownSuite,
};

std::string_view to_string(ErrorCode code);

/// Exit-code class of an error: 1 usage, 2 validation/parse, 3 numerical.
int exit_code_for(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what,
        std::optional<std::size_t> index = std::nullopt)
      : std::runtime_error(what), code_(code), index_(index) {}

  ErrorCode code() const noexcept { return code_; }

  /// Offending member index, when the error concerns one element of a set.
  std::optional<std::size_t> index() const noexcept { return index_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> index_;
};

}  // namespace loewner
