#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tutte {

enum class ErrorKind {
  NonExactDivision,
  DimensionMismatch,
  ElementOutOfRange,
  NotCircuitHyperplane,
  PreconditionViolated,
  GroundSetTooLarge,
  ResourceBudgetExceeded,
  SizeBudgetExceeded,
  GraphTooLarge,
  InvalidParameters,
  InvalidRank,
  InvalidSize,
  InvalidPartition,
  InvalidMatroid,
  NotPrimePower,
  UnsupportedWidth,
  UnsupportedEngine,
  UnknownEntry,
  UnknownSystem,
  ParseError,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries a kind so that callers (the
/// CLI in particular) can map it to an exit status without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

inline std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NonExactDivision: return "NonExactDivision";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::ElementOutOfRange: return "ElementOutOfRange";
    case ErrorKind::NotCircuitHyperplane: return "NotCircuitHyperplane";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::GroundSetTooLarge: return "GroundSetTooLarge";
    case ErrorKind::ResourceBudgetExceeded: return "ResourceBudgetExceeded";
    case ErrorKind::SizeBudgetExceeded: return "SizeBudgetExceeded";
    case ErrorKind::GraphTooLarge: return "GraphTooLarge";
    case ErrorKind::InvalidParameters: return "InvalidParameters";
    case ErrorKind::InvalidRank: return "InvalidRank";
    case ErrorKind::InvalidSize: return "InvalidSize";
    case ErrorKind::InvalidPartition: return "InvalidPartition";
    case ErrorKind::InvalidMatroid: return "InvalidMatroid";
    case ErrorKind::NotPrimePower: return "NotPrimePower";
    case ErrorKind::UnsupportedWidth: return "UnsupportedWidth";
    case ErrorKind::UnsupportedEngine: return "UnsupportedEngine";
    case ErrorKind::UnknownEntry: return "UnknownEntry";
    case ErrorKind::UnknownSystem: return "UnknownSystem";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace tutte
