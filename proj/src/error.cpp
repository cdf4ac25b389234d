#include "fillcurve/error.hpp"

namespace fillcurve {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::NotASubfield: return "NotASubfield";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::MixedBidegree: return "MixedBidegree";
    case ErrorKind::BadCoefficient: return "BadCoefficient";
    case ErrorKind::BidegreeMismatch: return "BidegreeMismatch";
    case ErrorKind::ZeroDivisor: return "ZeroDivisor";
    case ErrorKind::Infeasible: return "Infeasible";
    case ErrorKind::NotFilling: return "NotFilling";
    case ErrorKind::BidegreeTooSmall: return "BidegreeTooSmall";
    case ErrorKind::BadShape: return "BadShape";
    case ErrorKind::SetupViolation: return "SetupViolation";
    case ErrorKind::UnsupportedQ: return "UnsupportedQ";
    case ErrorKind::BadParameters: return "BadParameters";
  }
  return "Unknown";
}

}  // namespace fillcurve
