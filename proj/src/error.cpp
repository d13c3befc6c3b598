#include "qmeur/error.hpp"

namespace qmeur {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NotHermitian: return "NotHermitian";
    case ErrorKind::NotSquare: return "NotSquare";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::InvalidSubsystem: return "InvalidSubsystem";
    case ErrorKind::InvalidDistribution: return "InvalidDistribution";
    case ErrorKind::DegenerateDraw: return "DegenerateDraw";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::WrongArity: return "WrongArity";
    case ErrorKind::InvalidPartition: return "InvalidPartition";
    case ErrorKind::UnknownProvider: return "UnknownProvider";
    case ErrorKind::UnknownScenario: return "UnknownScenario";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ValidationError: return "ValidationError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

}  // namespace qmeur
