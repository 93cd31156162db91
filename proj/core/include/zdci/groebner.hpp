#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "zdci/polynomial.hpp"

namespace zdci {

// Reduced Groebner basis under the ring's ordering, with optional lift data:
// elements[k] == sum_j lift[k][j] * generators[j].
struct GroebnerBasis {
  RingPtr ring;
  std::vector<Polynomial> elements;
  std::vector<Polynomial> generators;
  std::vector<std::vector<Polynomial>> lift;

  bool has_lift() const noexcept { return !lift.empty() || elements.empty(); }
  bool is_unit() const noexcept {
    return elements.size() == 1 && elements.front().is_constant();
  }
  // Every variable has a pure power among the leading terms.
  bool is_zero_dimensional() const;
  std::vector<Monomial> leading_monomials() const;
};

// Normal selection strategy (smallest lcm degree, then pair creation order)
// with Buchberger's product and chain criteria. Survivors keep insertion
// order: input generators first, then reduced S-polynomials.
GroebnerBasis buchberger(std::span<const Polynomial> generators, bool track_lift = false);

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis);
bool ideal_contains(const GroebnerBasis& basis, const Polynomial& f);
bool ideal_contains(const GroebnerBasis& basis, std::span<const Polynomial> fs);

struct DivisionResult {
  std::vector<Polynomial> quotients;
  Polynomial remainder;
};

// Multivariate division; the reducer is the first divisor whose leading term
// divides the leading term of the working polynomial.
DivisionResult divide_with_quotients(const Polynomial& f, std::span<const Polynomial> divisors);

struct DegreeFormIdeal {
  std::vector<Polynomial> degree_forms;
  GroebnerBasis macaulay_basis;
};

// Requires a degree-compatible ring ordering.
DegreeFormIdeal degree_form_ideal(std::span<const Polynomial> generators);

struct HilbertData {
  std::size_t mu = 0;
  std::vector<std::size_t> hf;
  std::vector<std::size_t> castelnuovo;
  std::size_t ri = 0;
  std::size_t last_difference = 0;

  bool castelnuovo_symmetric() const;
};

// Monomials outside the leading-term ideal, ascending by degree then ring
// ordering. Raises NotZeroDimensional for positive-dimensional ideals.
std::vector<Monomial> standard_monomials(const GroebnerBasis& basis);

HilbertData hilbert_data(const GroebnerBasis& basis);
// Computes a degree-compatible basis first when the ring ordering is not.
HilbertData hilbert_data(std::span<const Polynomial> generators);

bool ideal_equal(std::span<const Polynomial> a, std::span<const Polynomial> b);
// Reduced Groebner basis of the intersection.
std::vector<Polynomial> ideal_intersect(std::span<const Polynomial> a,
                                        std::span<const Polynomial> b);

// Generators rewritten under another ordering of the same ring.
std::vector<Polynomial> in_ring(std::span<const Polynomial> fs, const RingPtr& target);

}  // namespace zdci
