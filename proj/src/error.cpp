#include "vsl/error.hpp"

namespace vsl {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotDivisible: return "NotDivisible";
    case ErrorKind::NegativeExponentShift: return "NegativeExponentShift";
    case ErrorKind::BoundExceeded: return "BoundExceeded";
    case ErrorKind::SizeMismatch: return "SizeMismatch";
    case ErrorKind::InvalidStep: return "InvalidStep";
    case ErrorKind::BelowDiagonal: return "BelowDiagonal";
    case ErrorKind::DiagonalOnMainDiagonal: return "DiagonalOnMainDiagonal";
    case ErrorKind::NotClosed: return "NotClosed";
    case ErrorKind::PointNotOnPath: return "PointNotOnPath";
    case ErrorKind::HasDiagonal: return "HasDiagonal";
    case ErrorKind::InvalidColoring: return "InvalidColoring";
    case ErrorKind::NonTermination: return "NonTermination";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Limits& limits() {
  static Limits instance;
  return instance;
}

}  // namespace vsl
