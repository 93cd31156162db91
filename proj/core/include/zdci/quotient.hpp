#pragma once

#include <cstddef>
#include <memory>
#include <mutex>
#include <span>
#include <unordered_map>
#include <vector>

#include "zdci/groebner.hpp"
#include "zdci/matrix.hpp"
#include "zdci/univariate.hpp"

namespace zdci {

inline constexpr std::size_t kDefaultDimensionCap = 512;

// P/I for a zero-dimensional I, with basis the standard monomials of the
// given Groebner basis. Multiplication matrices are built on first use.
class QuotientRing {
 public:
  explicit QuotientRing(GroebnerBasis basis, std::size_t dimension_cap = kDefaultDimensionCap);

  const GroebnerBasis& basis() const noexcept { return basis_; }
  const RingPtr& ring() const noexcept { return basis_.ring; }
  const std::vector<Monomial>& monomials() const noexcept { return monomials_; }
  std::size_t dimension() const noexcept { return monomials_.size(); }

  std::vector<Scalar> residue_vector(const Polynomial& f) const;
  Polynomial from_vector(std::span<const Scalar> v) const;

  // Column k holds the coordinates of x_var * t_k.
  const Matrix& multiplication_matrix(std::size_t var) const;
  Matrix multiplication_matrix(const Polynomial& f) const;

 private:
  GroebnerBasis basis_;
  std::vector<Monomial> monomials_;
  std::unordered_map<Monomial, std::size_t, MonomialHash> index_;
  mutable std::mutex mutex_;
  mutable std::vector<std::unique_ptr<Matrix>> matrices_;
};

// Monic least-degree q with q(f) in I (Krylov iteration).
UPoly minimal_polynomial(const Polynomial& f, const QuotientRing& quotient);

// Reduced Groebner basis of the radical; needs a perfect coefficient field.
std::vector<Polynomial> radical_zero_dim(std::span<const Polynomial> generators);

// Reduced Groebner basis, elements in increasing order of leading terms.
std::vector<Polynomial> vanishing_ideal_of_points(const RingPtr& ring,
                                                  std::span<const std::vector<Scalar>> points);

}  // namespace zdci
