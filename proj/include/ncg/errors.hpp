#pragma once

#include <stdexcept>
#include <string>

namespace ncg {

enum class ErrorKind {
  NotLatinSquare,
  NoIdentityAtZero,
  NotAssociative,
  NoInverse,
  NotAPermutation,
  OrderLimitExceeded,
  NotPrime,
  BadParameter,
  NotNormal,
  NotPGroup,
  AbelianGroup,
  SizeLimitExceeded,
  InvalidIso,
  KernelFoundNoComplement,
  NotACGroup,
  NotSolvable,
  Unclassifiable,
  ParseError,
  ValidationError,
  IoError,
  UsageError,
};

const char* error_kind_name(ErrorKind kind);

/// All library failures are thrown as Error; `kind()` is stable and
/// machine-checkable, `what()` carries the human-readable detail.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace ncg
