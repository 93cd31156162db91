#include "zdci/error.hpp"

namespace zdci {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::RingMismatch: return "RingMismatch";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::NotHomogeneous: return "NotHomogeneous";
    case ErrorKind::ConstantPolynomial: return "ConstantPolynomial";
    case ErrorKind::ExponentOverflow: return "ExponentOverflow";
    case ErrorKind::NotZeroDimensional: return "NotZeroDimensional";
    case ErrorKind::UnsupportedField: return "UnsupportedField";
    case ErrorKind::DuplicatePoint: return "DuplicatePoint";
    case ErrorKind::DegreeCapExceeded: return "DegreeCapExceeded";
    case ErrorKind::PrimitiveElementNotFound: return "PrimitiveElementNotFound";
    case ErrorKind::NotMaximal: return "NotMaximal";
    case ErrorKind::NotPrimary: return "NotPrimary";
    case ErrorKind::NotInIdeal: return "NotInIdeal";
    case ErrorKind::CharacteristicObstruction: return "CharacteristicObstruction";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

}  // namespace zdci
