#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "zdci/ci.hpp"
#include "zdci/param_poly.hpp"
#include "zdci/polynomial.hpp"

namespace zdci {

// Order ideal O and its border, both ascending by degree and then by the ring
// ordering.
struct OrderIdeal {
  RingPtr ring;
  std::vector<Monomial> terms;
  std::vector<Monomial> border;

  // Raises InvalidArgument unless the terms contain 1 and are closed under
  // division.
  static OrderIdeal from_terms(const RingPtr& ring, std::vector<Monomial> terms);
  std::size_t size() const noexcept { return terms.size(); }
  bool contains(const Monomial& t) const;
  // h_i = #{t in O : deg t = i}.
  std::vector<std::size_t> degree_counts() const;
};

// g_j = b_j - sum_i gamma_ij t_i, one per border term, in border order.
struct BorderBasis {
  OrderIdeal order;
  std::vector<Polynomial> polynomials;
  bool degree_filtered = false;
};

// O from a degree-compatible Groebner basis (DegRevLex when the ring ordering
// is not degree compatible), g_j = b_j - NF(b_j).
BorderBasis border_basis(std::span<const Polynomial> generators);
// O given; raises InvalidArgument when O is not a basis of the quotient.
BorderBasis border_basis(std::span<const Polynomial> generators, const OrderIdeal& order);

struct DegreeFilterCheck {
  bool prebasis = false;
  bool border_basis = false;
  // Castelnuovo function of <G> equals the degree counts of O.
  bool hilbert_condition = false;
  // b_j lies in the support of DF(g_j) for all j.
  bool border_term_condition = false;
  std::vector<std::size_t> failing_border_terms;
  bool holds = false;
  std::vector<Polynomial> degree_forms;
};

DegreeFilterCheck check_degree_filtered(const BorderBasis& basis);

// Raises InvalidArgument when the border basis is not degree filtered.
CIReport check_sci_border(std::span<const Polynomial> generators, const CIOptions& options = {},
                          const std::optional<OrderIdeal>& order = std::nullopt);

struct MinorLocus {
  std::vector<std::size_t> column_subset;
  Polynomial residue;
  // Primitive numerators of the residue coefficients; the minor is nonzero
  // at a parameter point iff one of them is.
  std::vector<ParamPoly> conditions;
  std::string text;
};

struct FamilyLocus {
  CIReport report;
  std::vector<MinorLocus> minors;
  std::vector<std::string> conditions;
  // Computations over Q(c) are valid on a dense open set of parameters only.
  bool generic_only = true;
};

FamilyLocus family_sci_locus(std::span<const Polynomial> generators,
                             const CIOptions& options = {},
                             const std::optional<OrderIdeal>& order = std::nullopt);

}  // namespace zdci
