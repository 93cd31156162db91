#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "zdci/monomial.hpp"

namespace zdci {

// Multivariate polynomial with integer coefficients in the parameters
// c_1..c_m of a rational-function field. Terms are kept sorted decreasingly
// under DegRevLex on the parameters, with no zero coefficients.
class ParamPoly {
 public:
  struct Term {
    Monomial mono;
    mpz_class coeff;
  };

  ParamPoly() = default;
  explicit ParamPoly(std::size_t nvars) : nvars_(nvars) {}

  static ParamPoly constant(std::size_t nvars, const mpz_class& value);
  static ParamPoly variable(std::size_t nvars, std::size_t index);
  // Sorts and combines like terms.
  static ParamPoly from_terms(std::size_t nvars, std::vector<Term> terms);

  std::size_t nvars() const noexcept { return nvars_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
  }
  // Value of a constant polynomial (0 for the zero polynomial).
  mpz_class constant_value() const;
  const mpz_class& leading_coeff() const { return terms_.front().coeff; }
  unsigned degree_in(std::size_t var) const noexcept;

  ParamPoly operator-() const;
  ParamPoly operator+(const ParamPoly& other) const;
  ParamPoly operator-(const ParamPoly& other) const;
  ParamPoly operator*(const ParamPoly& other) const;
  ParamPoly operator*(const mpz_class& scalar) const;
  bool operator==(const ParamPoly& other) const;

  // Nonnegative gcd of the integer coefficients (0 for the zero polynomial).
  mpz_class content() const;

  // Exact quotients; raise ErrorKind::InvalidArgument when the division is not exact.
  static ParamPoly divexact(const ParamPoly& a, const ParamPoly& b);
  static ParamPoly divexact(const ParamPoly& a, const mpz_class& b);

  // Greatest common divisor over Z[c_1..c_m] via subresultant remainder
  // sequences, normalized to a positive leading coefficient.
  static ParamPoly gcd(const ParamPoly& a, const ParamPoly& b);

  mpq_class evaluate(std::span<const mpq_class> values) const;

  std::string to_string(std::span<const std::string> names) const;

 private:
  std::size_t nvars_ = 0;
  std::vector<Term> terms_;
};

}  // namespace zdci
