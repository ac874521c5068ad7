#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cubocubic {

enum class ErrorKind {
  DivisionByZero,
  FieldMismatch,
  NonSquare,
  IndexOutOfRange,
  NamespaceMismatch,
  NonHomogeneousImages,
  DivisorZero,
  DegreeOverflow,
  DegenerateTensor,
  NotBirational,
  DegreeCapExceeded,
  NotEventuallyLinear,
  PrimeTooLarge,
  BadPrime,
  ParseError,
  GenericityExhausted,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries one of the kinds above so
/// callers (tests, the CLI, the report collector) can dispatch on it.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace cubocubic
