#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "zdci/param_poly.hpp"

namespace zdci {

// Coefficient field: Q, F_p (p prime < 2^31) or Q(c_1..c_m).
struct FieldDescriptor {
  enum class Kind { Rational, Prime, Function };

  Kind kind = Kind::Rational;
  std::uint32_t prime = 0;
  std::vector<std::string> parameters;

  static FieldDescriptor rationals();
  // Raises InvalidArgument unless p is a prime below 2^31.
  static FieldDescriptor prime_field(std::uint64_t p);
  static FieldDescriptor function_field(std::vector<std::string> parameters);

  std::uint32_t characteristic() const noexcept { return kind == Kind::Prime ? prime : 0; }
  bool is_parametric() const noexcept { return kind == Kind::Function; }

  bool operator==(const FieldDescriptor&) const = default;
};

std::string to_string(const FieldDescriptor& field);

bool is_prime(std::uint64_t n) noexcept;

// Number of monomials (numerator plus denominator) above which rational
// function values are gcd-normalized eagerly. Defaults to 64.
std::size_t fraction_normalize_threshold() noexcept;
void set_fraction_normalize_threshold(std::size_t terms) noexcept;

// Exact field element. Immutable value semantics; all arithmetic returns
// canonical values except rational functions, which are reduced lazily
// (see fraction_normalize_threshold) and compared by cross-multiplication.
class Scalar {
 public:
  struct ModP {
    std::uint32_t value;
    std::uint32_t modulus;
  };
  struct Fraction {
    ParamPoly num;
    ParamPoly den;
  };

  Scalar() : value_(mpq_class(0)) {}

  static Scalar zero(const FieldDescriptor& field);
  static Scalar one(const FieldDescriptor& field);
  static Scalar from_int(const FieldDescriptor& field, long value);
  static Scalar from_rational(const FieldDescriptor& field, const mpq_class& value);
  static Scalar parameter(const FieldDescriptor& field, std::size_t index);
  static Scalar fraction(ParamPoly num, ParamPoly den);

  bool is_zero() const noexcept;
  bool is_one() const;

  bool is_rational() const noexcept { return std::holds_alternative<mpq_class>(value_); }
  bool is_modp() const noexcept { return std::holds_alternative<ModP>(value_); }
  bool is_fraction() const noexcept { return std::holds_alternative<Fraction>(value_); }
  const mpq_class& rational() const { return std::get<mpq_class>(value_); }
  const ModP& modp() const { return std::get<ModP>(value_); }
  const Fraction& fraction() const { return std::get<Fraction>(value_); }

  // True when the value lies in the prime field (Q or F_p); for rational
  // functions this means numerator and denominator are constants.
  bool is_constant() const;
  // Rational value of a constant element; F_p values map to 0..p-1.
  mpq_class constant_value() const;

  Scalar operator-() const;
  Scalar operator+(const Scalar& other) const;
  Scalar operator-(const Scalar& other) const;
  Scalar operator*(const Scalar& other) const;
  Scalar operator/(const Scalar& other) const;
  Scalar inverse() const;
  Scalar& operator+=(const Scalar& other) { return *this = *this + other; }
  Scalar& operator-=(const Scalar& other) { return *this = *this - other; }
  Scalar& operator*=(const Scalar& other) { return *this = *this * other; }

  bool operator==(const Scalar& other) const;

  // Full gcd cancellation for rational functions; identity otherwise.
  Scalar normalized() const;

 private:
  explicit Scalar(mpq_class v) : value_(std::move(v)) {}
  explicit Scalar(ModP v) : value_(v) {}
  explicit Scalar(Fraction v) : value_(std::move(v)) {}

  static Scalar make_fraction(ParamPoly num, ParamPoly den);

  std::variant<mpq_class, ModP, Fraction> value_;
};

}  // namespace zdci
