#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <random>
#include <string>
#include <vector>

#include "zdci/format.hpp"
#include "zdci/groebner.hpp"
#include "zdci/minors.hpp"
#include "zdci/polynomial.hpp"

namespace zdci::testing {

RingPtr ring_q(std::initializer_list<const char*> vars,
               TermOrder order = TermOrder::degrevlex());
RingPtr ring_fp(std::uint32_t p, std::initializer_list<const char*> vars,
                TermOrder order = TermOrder::degrevlex());

Polynomial poly(const RingPtr& ring, const std::string& text);
std::vector<Polynomial> polys(const RingPtr& ring, std::initializer_list<const char*> texts);
std::vector<std::string> texts(const std::vector<Polynomial>& fs);

// Fraction-free elimination with exact polynomial division.
Polynomial bareiss_determinant(std::vector<std::vector<Polynomial>> m);
Polynomial bareiss_minor(const SyzygyMatrix& w, const std::vector<std::size_t>& columns);

// Exact quotient f / g; throws std::logic_error if g does not divide f.
Polynomial exact_quotient(const Polynomial& f, const Polynomial& g);

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

// dim of P_{<=d} modulo the span of t*f_j with deg(t*f_j) <= d.
std::size_t truncated_codimension(const std::vector<Polynomial>& gens, unsigned d);

// Minimal generators of a monomial ideal.
std::vector<Monomial> minimal_monomial_generators(std::vector<Monomial> gens);
std::size_t count_standard_monomials(const std::vector<Monomial>& gens, std::size_t nvars,
                                     unsigned bound);

struct RandomIdeal {
  std::string kind;
  std::vector<Polynomial> generators;
};

// Deterministic generator of small zero-dimensional ideals.
class IdealFactory {
 public:
  IdealFactory(RingPtr ring, std::uint64_t seed) : ring_(std::move(ring)), rng_(seed) {}

  long uniform(long lo, long hi);
  Scalar random_scalar(long lo, long hi);
  Polynomial random_polynomial(unsigned max_degree, std::size_t terms, long coeff_bound);
  Polynomial random_linear_form();

  std::vector<std::vector<Scalar>> random_points(std::size_t count, long bound);
  std::vector<Polynomial> points_ideal(std::size_t count);
  // Random 0-dimensional monomial ideal, returned as exponent vectors.
  std::vector<Monomial> random_monomial_ideal(unsigned max_power);
  // Monomial ideal moved by an invertible affine change of coordinates.
  std::vector<Polynomial> transformed_monomial_ideal(unsigned max_power);
  // g_i = x_i^{a_i} + terms in x_{i+1}..x_n of lower degree in x_i.
  std::vector<Polynomial> triangular_ci(unsigned max_power);
  std::vector<Polynomial> intersection_ideal();

  RandomIdeal any();

  std::mt19937_64& engine() { return rng_; }
  const RingPtr& ring() const { return ring_; }

 private:
  std::vector<Polynomial> affine_substitution();

  RingPtr ring_;
  std::mt19937_64 rng_;
};

// Evaluates the parameters of a Q(c) polynomial; nullopt when a
// denominator vanishes.
std::optional<Polynomial> specialize(const Polynomial& f, const RingPtr& target,
                                     std::span<const mpq_class> values);

Polynomial monomial_polynomial(const RingPtr& ring, const Monomial& m);

}  // namespace zdci::testing
