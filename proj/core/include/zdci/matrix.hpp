#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "zdci/scalar.hpp"

namespace zdci {

// Dense matrix over a coefficient field, row-major.
class Matrix {
 public:
  Matrix(FieldDescriptor field, std::size_t rows, std::size_t cols);

  static Matrix identity(const FieldDescriptor& field, std::size_t n);

  const FieldDescriptor& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Scalar& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Matrix operator*(const Matrix& other) const;
  Matrix operator+(const Matrix& other) const;
  Matrix operator*(const Scalar& s) const;
  bool operator==(const Matrix& other) const;
  bool is_zero() const;

  std::vector<Scalar> apply(std::span<const Scalar> v) const;
  std::size_t rank() const;

 private:
  FieldDescriptor field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> data_;
};

// Incrementally built echelon form that remembers how each stored row was
// obtained from the inserted vectors. Pivot choice: first nonzero entry.
class EchelonBasis {
 public:
  EchelonBasis(FieldDescriptor field, std::size_t length);

  std::size_t size() const noexcept { return inserted_; }
  std::size_t rank() const noexcept { return rows_.size(); }

  // If v is a combination of the independent vectors inserted so far,
  // returns c with v = sum_k c[k] * inserted[k] (indexed by insertion order of
  // independent vectors) and leaves the basis unchanged. Otherwise stores v
  // and returns nothing.
  std::optional<std::vector<Scalar>> insert(std::span<const Scalar> v);
  std::optional<std::vector<Scalar>> express(std::span<const Scalar> v) const;

 private:
  struct Row {
    std::vector<Scalar> values;
    std::vector<Scalar> combination;
    std::size_t pivot;
  };

  std::pair<std::vector<Scalar>, std::vector<Scalar>> reduce(std::span<const Scalar> v) const;

  FieldDescriptor field_;
  std::size_t length_;
  std::size_t inserted_ = 0;
  std::vector<Row> rows_;
};

}  // namespace zdci
