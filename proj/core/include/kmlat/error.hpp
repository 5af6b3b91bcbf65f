#pragma once

#include <stdexcept>
#include <string>

namespace kmlat {

// Diagnostic categories surfaced by the library.  CLI maps InvalidInput-ish
// kinds to exit code 2 and budget kinds to exit code 3.
enum class ErrorKind {
  NonTwoDiagonal,
  PositiveOffDiagonal,
  AsymmetricZero,
  DimensionMismatch,
  ResourceBudgetExceeded,
  DegreeBudgetExceeded,
  WallIncidence,
  NotPrenilpotent,
  DegenerateSegment,
  NonEmptyLeviPart,
  NotUnimodular,
  InvarianceViolation,
  UnsupportedOrbit,
  InvalidInput,
  Internal,
};

const char* to_string(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind) {}

  Error(ErrorKind kind, std::string message, int i, int j)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message +
                           " at (" + std::to_string(i) + "," +
                           std::to_string(j) + ")"),
        kind_(kind), row_(i), col_(j) {}

  ErrorKind kind() const { return kind_; }
  int row() const { return row_; }
  int col() const { return col_; }

 private:
  ErrorKind kind_;
  int row_ = -1;
  int col_ = -1;
};

inline const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::NonTwoDiagonal: return "NonTwoDiagonal";
    case ErrorKind::PositiveOffDiagonal: return "PositiveOffDiagonal";
    case ErrorKind::AsymmetricZero: return "AsymmetricZero";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::ResourceBudgetExceeded: return "ResourceBudgetExceeded";
    case ErrorKind::DegreeBudgetExceeded: return "DegreeBudgetExceeded";
    case ErrorKind::WallIncidence: return "WallIncidence";
    case ErrorKind::NotPrenilpotent: return "NotPrenilpotent";
    case ErrorKind::DegenerateSegment: return "DegenerateSegment";
    case ErrorKind::NonEmptyLeviPart: return "NonEmptyLeviPart";
    case ErrorKind::NotUnimodular: return "NotUnimodular";
    case ErrorKind::InvarianceViolation: return "InvarianceViolation";
    case ErrorKind::UnsupportedOrbit: return "UnsupportedOrbit";
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace kmlat
