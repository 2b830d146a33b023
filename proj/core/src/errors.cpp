#include "domekit/errors.hpp"

namespace domekit {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidPoint: return "InvalidPoint";
    case ErrorCode::DegenerateMap: return "DegenerateMap";
    case ErrorCode::CrossingLeaves: return "CrossingLeaves";
    case ErrorCode::NonpositiveWeight: return "NonpositiveWeight";
    case ErrorCode::NotTransverse: return "NotTransverse";
    case ErrorCode::NonpositiveScale: return "NonpositiveScale";
    case ErrorCode::TooManyLeaves: return "TooManyLeaves";
    case ErrorCode::UnknownGap: return "UnknownGap";
    case ErrorCode::OutsideWedge: return "OutsideWedge";
    case ErrorCode::NotInjective: return "NotInjective";
    case ErrorCode::DegenerateCrescent: return "DegenerateCrescent";
    case ErrorCode::TooFewPoints: return "TooFewPoints";
    case ErrorCode::NumericallyCoincident: return "NumericallyCoincident";
    case ErrorCode::PointNotInDomain: return "PointNotInDomain";
    case ErrorCode::DepthTooSmall: return "DepthTooSmall";
    case ErrorCode::OutOfDomain: return "OutOfDomain";
    case ErrorCode::NonpositiveInput: return "NonpositiveInput";
    case ErrorCode::NonpositiveModulusParameter: return "NonpositiveModulusParameter";
    case ErrorCode::Undefined: return "Undefined";
    case ErrorCode::EmptyField: return "EmptyField";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace domekit
