#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "zdci/polynomial.hpp"

namespace zdci {

// Dense univariate polynomial, coefficients stored in ascending degree.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(FieldDescriptor field);
  UPoly(FieldDescriptor field, std::vector<Scalar> coeffs);

  static UPoly constant(const FieldDescriptor& field, Scalar c);
  static UPoly monomial(const FieldDescriptor& field, std::size_t degree, Scalar c);
  static UPoly x(const FieldDescriptor& field);
  // f must only involve variable `var`.
  static UPoly from_polynomial(const Polynomial& f, std::size_t var);

  const FieldDescriptor& field() const noexcept { return field_; }
  const std::vector<Scalar>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const Scalar& leading_coeff() const { return coeffs_.back(); }
  Scalar coeff(std::size_t k) const;

  UPoly operator-() const;
  UPoly operator+(const UPoly& other) const;
  UPoly operator-(const UPoly& other) const;
  UPoly operator*(const UPoly& other) const;
  UPoly operator*(const Scalar& s) const;
  bool operator==(const UPoly& other) const;

  static std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
  UPoly operator/(const UPoly& other) const { return divmod(*this, other).first; }
  UPoly operator%(const UPoly& other) const { return divmod(*this, other).second; }

  UPoly monic() const;
  UPoly derivative() const;
  Scalar evaluate(const Scalar& x) const;
  // Monic gcd; gcd(0, 0) = 0.
  static UPoly gcd(const UPoly& a, const UPoly& b);
  // base^e mod m.
  static UPoly pow_mod(const UPoly& base, const mpz_class& e, const UPoly& m);

  // q(arg) computed by Horner's rule in arg's ring.
  Polynomial compose(const Polynomial& arg) const;
  std::string to_string(const std::string& var) const;

 private:
  void trim();

  FieldDescriptor field_;
  std::vector<Scalar> coeffs_;
};

// Product of the distinct monic irreducible factors. In characteristic p the
// inseparable part is handled through p-th roots.
UPoly squarefree_part(const UPoly& f);

}  // namespace zdci
