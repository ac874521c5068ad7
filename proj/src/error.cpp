#include "cubocubic/error.hpp"

namespace cubocubic {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::NonSquare: return "NonSquare";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::NamespaceMismatch: return "NamespaceMismatch";
    case ErrorKind::NonHomogeneousImages: return "NonHomogeneousImages";
    case ErrorKind::DivisorZero: return "DivisorZero";
    case ErrorKind::DegreeOverflow: return "DegreeOverflow";
    case ErrorKind::DegenerateTensor: return "DegenerateTensor";
    case ErrorKind::NotBirational: return "NotBirational";
    case ErrorKind::DegreeCapExceeded: return "DegreeCapExceeded";
    case ErrorKind::NotEventuallyLinear: return "NotEventuallyLinear";
    case ErrorKind::PrimeTooLarge: return "PrimeTooLarge";
    case ErrorKind::BadPrime: return "BadPrime";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::GenericityExhausted: return "GenericityExhausted";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace cubocubic
