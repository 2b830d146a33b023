#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace domekit {

enum class ErrorCode {
  InvalidPoint,
  DegenerateMap,
  CrossingLeaves,
  NonpositiveWeight,
  NotTransverse,
  NonpositiveScale,
  TooManyLeaves,
  UnknownGap,
  OutsideWedge,
  NotInjective,
  DegenerateCrescent,
  TooFewPoints,
  NumericallyCoincident,
  PointNotInDomain,
  DepthTooSmall,
  OutOfDomain,
  NonpositiveInput,
  NonpositiveModulusParameter,
  Undefined,
  EmptyField,
  ParseError,
};

std::string_view to_string(ErrorCode code);

// Domain error raised by every module. The CLI maps these to exit code 1 and
// prints the code name.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace domekit
