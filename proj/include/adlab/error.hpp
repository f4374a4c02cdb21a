#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace adlab {

enum class ErrorKind {
  NotATopology,
  IndexOutOfRange,
  NotAPreorder,
  NotALattice,
  NonDistributiveLattice,
  NotContinuous,
  NotMonotone,
  NotAPointMap,
  TrivialFrame,
  VariantMismatch,
  UnknownTheorem,
  BudgetExceeded,
  TooLarge,
  InvalidInput,
  Internal,
};

std::string_view to_string(ErrorKind kind);

/// All recoverable failures in the library are reported through this type.
/// `Internal` marks a broken invariant that a theorem guarantees cannot occur.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace adlab
