#include "lensroots/error.hpp"

namespace lensroots {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::NotAdmissible: return "NotAdmissible";
    case ErrorCode::CircleThroughZero: return "CircleThroughZero";
    case ErrorCode::NonIsolatedZeroSet: return "NonIsolatedZeroSet";
    case ErrorCode::UncertifiedCount: return "UncertifiedCount";
    case ErrorCode::RayViolation: return "RayViolation";
    case ErrorCode::NotInvariant: return "NotInvariant";
    case ErrorCode::BadParameters: return "BadParameters";
    case ErrorCode::NotSquarefree: return "NotSquarefree";
    case ErrorCode::DegreeViolation: return "DegreeViolation";
    case ErrorCode::DuplicatePoles: return "DuplicatePoles";
    case ErrorCode::ZeroIsRoot: return "ZeroIsRoot";
    case ErrorCode::NotInClass: return "NotInClass";
    case ErrorCode::BadWeight: return "BadWeight";
    case ErrorCode::NotConvenient: return "NotConvenient";
    case ErrorCode::NonPositivePolarDegree: return "NonPositivePolarDegree";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace lensroots
