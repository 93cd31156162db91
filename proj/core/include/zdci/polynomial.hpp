#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "zdci/monomial.hpp"
#include "zdci/scalar.hpp"
#include "zdci/term_order.hpp"

namespace zdci {

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

// Polynomial ring K[x_1..x_n] with a fixed term ordering.
class Ring : public std::enable_shared_from_this<Ring> {
 public:
  Ring(FieldDescriptor field, std::vector<std::string> variables, TermOrder order);

  static RingPtr make(FieldDescriptor field, std::vector<std::string> variables,
                      TermOrder order = TermOrder::degrevlex());

  const FieldDescriptor& field() const noexcept { return field_; }
  const std::vector<std::string>& variables() const noexcept { return variables_; }
  std::size_t nvars() const noexcept { return variables_.size(); }
  const TermOrder& order() const noexcept { return order_; }

  RingPtr with_order(TermOrder order) const;

  int compare(const Monomial& a, const Monomial& b) const noexcept {
    return order_.compare(a, b);
  }
  bool operator==(const Ring& other) const;

  Scalar zero() const { return Scalar::zero(field_); }
  Scalar one() const { return Scalar::one(field_); }
  Scalar scalar(long value) const { return Scalar::from_int(field_, value); }

 private:
  FieldDescriptor field_;
  std::vector<std::string> variables_;
  TermOrder order_;
};

// Sparse distributed polynomial. Terms are sorted strictly decreasing under
// the ring's ordering and carry no zero coefficients.
class Polynomial {
 public:
  struct Term {
    Monomial mono;
    Scalar coeff;
  };

  explicit Polynomial(RingPtr ring);

  static Polynomial constant(RingPtr ring, Scalar value);
  static Polynomial from_int(RingPtr ring, long value);
  static Polynomial variable(RingPtr ring, std::size_t index);
  static Polynomial term(RingPtr ring, Monomial mono, Scalar coeff);
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
  }

  const Term& leading_term() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().mono; }
  const Scalar& leading_coeff() const { return terms_.front().coeff; }

  // Maximal total degree of a term; raises ZeroPolynomial on 0.
  unsigned degree() const;
  bool is_homogeneous() const noexcept;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial operator*(const Scalar& scalar) const;
  Polynomial& operator+=(const Polynomial& other) { return *this = *this + other; }
  Polynomial& operator-=(const Polynomial& other) { return *this = *this - other; }
  Polynomial mul_term(const Monomial& mono, const Scalar& coeff) const;
  // this -= coeff * mono * g
  void sub_mul(const Scalar& coeff, const Monomial& mono, const Polynomial& g);
  Polynomial pow(unsigned exponent) const;
  Polynomial monic() const;
  // Removes the leading term in place.
  void pop_leading();

  bool operator==(const Polynomial& other) const;

  // Same variables and field, possibly another ordering: re-sorts terms.
  Polynomial in_ring(const RingPtr& target) const;

  Scalar evaluate(std::span<const Scalar> point) const;
  // Substitutes values[i] for x_i (all in the target ring).
  Polynomial substitute(std::span<const Polynomial> values) const;

  // Debug validator for the sorted-terms invariant.
  bool is_canonical() const;

 private:
  RingPtr ring_;
  std::vector<Term> terms_;
};

void require_same_ring(const Polynomial& a, const Polynomial& b);

// Sum of the terms of maximal total degree.
Polynomial degree_form(const Polynomial& f);

// x_0^{deg f} f(x_1/x_0, ..., x_n/x_0) in the ring with x_0 prepended.
Polynomial homogenize(const Polynomial& f, const std::string& new_var_name);
// Sets variable `index` to 1 and drops it from the ring.
Polynomial dehomogenize(const Polynomial& f, std::size_t index = 0);

// Moves f into `target`, sending x_i to target variable image[i]. Variables
// with image -1 must not occur in f.
Polynomial map_variables(const Polynomial& f, const RingPtr& target,
                         std::span<const int> image);

Polynomial partial_derivative(const Polynomial& f, std::size_t index);

// (h_1..h_n) with h = sum h_i x_i; every term goes to the smallest variable
// index dividing it.
std::vector<Polynomial> split_by_variables(const Polynomial& h);

}  // namespace zdci
