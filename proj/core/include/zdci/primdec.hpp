#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "zdci/polynomial.hpp"
#include "zdci/univariate.hpp"

namespace zdci {

inline constexpr std::uint64_t kDefaultSeed = 0xC0FFEE;

struct MaximalityCertificate {
  bool maximal = false;
  std::size_t dimension = 0;
  // An element of P/M whose minimal polynomial decides the question: of
  // degree `dimension` and irreducible when maximal, reducible otherwise.
  std::optional<Polynomial> witness;
  UPoly minimal_polynomial;
};

MaximalityCertificate check_maximal(std::span<const Polynomial> generators,
                                    std::uint64_t seed = kDefaultSeed);

// (g_1..g_n), g_i with leading term a pure power of x_i in the Lex ordering.
std::vector<Polynomial> triangular_generators(std::span<const Polynomial> maximal);

struct PrimaryComponent {
  // Input generators plus the splitting polynomials that isolate this part.
  std::vector<Polynomial> generators;
  std::vector<Polynomial> component;
  std::vector<Polynomial> radical;
  std::vector<Polynomial> triangular;
  std::size_t multiplicity = 0;
  MaximalityCertificate certificate;
};

// Components sorted by the text of their reduced Groebner bases.
std::vector<PrimaryComponent> primary_decomposition(std::span<const Polynomial> generators,
                                                    std::uint64_t seed = kDefaultSeed);

}  // namespace zdci
