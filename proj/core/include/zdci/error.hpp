#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace zdci {

enum class ErrorKind {
  DivisionByZero,
  FieldMismatch,
  RingMismatch,
  ZeroPolynomial,
  NotHomogeneous,
  ConstantPolynomial,
  ExponentOverflow,
  NotZeroDimensional,
  UnsupportedField,
  DuplicatePoint,
  DegreeCapExceeded,
  PrimitiveElementNotFound,
  NotMaximal,
  NotPrimary,
  NotInIdeal,
  CharacteristicObstruction,
  InvalidArgument,
  Parse,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Single exception type for the library; callers branch on kind().
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void raise(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace zdci
