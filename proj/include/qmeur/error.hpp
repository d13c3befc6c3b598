#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qmeur {

enum class ErrorKind {
  NotHermitian,
  NotSquare,
  NoConvergence,
  DimensionMismatch,
  InvalidSubsystem,
  InvalidDistribution,
  DegenerateDraw,
  OutOfRange,
  WrongArity,
  InvalidPartition,
  UnknownProvider,
  UnknownScenario,
  ParseError,
  ValidationError,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Every failure in the library surfaces as this exception. The kind is the
// machine-readable part; what() carries "<Kind>: <detail>".
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace qmeur
