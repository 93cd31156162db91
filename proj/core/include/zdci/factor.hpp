#pragma once

#include <vector>

#include "zdci/univariate.hpp"

namespace zdci {

// Largest squarefree degree factored over Q.
inline constexpr int kRationalDegreeCap = 24;

struct Factor {
  UPoly factor;
  unsigned multiplicity;
};

// Monic irreducible factors with multiplicities, sorted by degree and then by
// coefficients. Over F_p: distinct-degree and Cantor-Zassenhaus splitting.
// Over Q: Hensel lifting from a good prime and subset recombination.
std::vector<Factor> factor_univariate(const UPoly& q);

bool is_irreducible(const UPoly& q);

}  // namespace zdci
