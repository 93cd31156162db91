#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "zdci/groebner.hpp"
#include "zdci/polynomial.hpp"

namespace zdci {

// n x r matrix with f_j = sum_i entries[i][j] * g_i.
struct SyzygyMatrix {
  std::vector<Polynomial> row_labels;
  std::vector<Polynomial> col_labels;
  std::vector<std::vector<Polynomial>> entries;

  std::size_t rows() const noexcept { return row_labels.size(); }
  std::size_t cols() const noexcept { return col_labels.size(); }
  const Polynomial& at(std::size_t i, std::size_t j) const { return entries[i][j]; }
};

// Quotients of the Lex division of each f_j by g. `divisor_order` permutes the
// order in which divisors are tried; rows stay indexed by g.
SyzygyMatrix build_w_matrix(std::span<const Polynomial> f, std::span<const Polynomial> g,
                            std::span<const std::size_t> divisor_order = {});

// Columns given directly: column j is `columns[j]` (length n).
SyzygyMatrix w_matrix_from_columns(std::vector<Polynomial> row_labels,
                                   std::vector<Polynomial> col_labels,
                                   const std::vector<std::vector<Polynomial>>& columns);

struct MinorReport {
  std::vector<std::size_t> column_subset;
  Polynomial minor;
  Polynomial residue;
  bool nonzero = false;
};

struct MinorOptions {
  bool short_circuit = false;
  unsigned threads = 1;
};

// Order-n minors in lexicographic subset order, reduced modulo `modulus`.
// With short_circuit the list ends at the first nonzero residue.
std::vector<MinorReport> fitting_minor_residues(const SyzygyMatrix& w,
                                                const GroebnerBasis& modulus,
                                                const MinorOptions& options = {});

// Canonical residue map; must be safe to call concurrently.
using Reducer = std::function<Polynomial(const Polynomial&)>;

std::vector<MinorReport> fitting_minor_residues(const SyzygyMatrix& w, const Reducer& reduce,
                                                const MinorOptions& options = {});

// Determinant of the n x n submatrix on `columns` by Laplace expansion.
Polynomial minor_determinant(const SyzygyMatrix& w, std::span<const std::size_t> columns);

// All k-subsets of {0..r-1} in lexicographic order.
std::vector<std::vector<std::size_t>> lexicographic_subsets(std::size_t r, std::size_t k);

}  // namespace zdci
