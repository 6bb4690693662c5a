#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lensroots {

enum class ErrorCode {
  ZeroPolynomial,
  NotAdmissible,
  CircleThroughZero,
  NonIsolatedZeroSet,
  UncertifiedCount,
  RayViolation,
  NotInvariant,
  BadParameters,
  NotSquarefree,
  DegreeViolation,
  DuplicatePoles,
  ZeroIsRoot,
  NotInClass,
  BadWeight,
  NotConvenient,
  NonPositivePolarDegree,
  ParseError,
};

std::string_view to_string(ErrorCode code);

// All library failures are reported through this exception; the code is the
// machine-readable part and is what the CLI maps onto exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace lensroots
