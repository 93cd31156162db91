#include "zdci/matrix.hpp"

#include <utility>

#include "zdci/error.hpp"

namespace zdci {

Matrix::Matrix(FieldDescriptor field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols) {
  data_.assign(rows * cols, Scalar::zero(field_));
}

Matrix Matrix::identity(const FieldDescriptor& field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(field);
  return m;
}

Matrix Matrix::operator*(const Matrix& other) const {
  if (cols_ != other.rows_) raise(ErrorKind::InvalidArgument, "matrix shapes do not match");
  Matrix out(field_, rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = at(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) {
        const Scalar& b = other.at(k, j);
        if (!b.is_zero()) out.at(i, j) += a * b;
      }
    }
  }
  return out;
}

Matrix Matrix::operator+(const Matrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    raise(ErrorKind::InvalidArgument, "matrix shapes do not match");
  }
  Matrix out = *this;
  for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] += other.data_[k];
  return out;
}

Matrix Matrix::operator*(const Scalar& s) const {
  Matrix out = *this;
  for (auto& v : out.data_) v *= s;
  return out;
}

bool Matrix::operator==(const Matrix& other) const {
  return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
}

bool Matrix::is_zero() const {
  for (const auto& v : data_) {
    if (!v.is_zero()) return false;
  }
  return true;
}

std::vector<Scalar> Matrix::apply(std::span<const Scalar> v) const {
  if (v.size() != cols_) raise(ErrorKind::InvalidArgument, "vector length does not match");
  std::vector<Scalar> out(rows_, Scalar::zero(field_));
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (!v[j].is_zero() && !at(i, j).is_zero()) out[i] += at(i, j) * v[j];
    }
  }
  return out;
}

std::size_t Matrix::rank() const {
  EchelonBasis e(field_, cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    e.insert(std::span<const Scalar>(data_.data() + i * cols_, cols_));
  }
  return e.rank();
}

EchelonBasis::EchelonBasis(FieldDescriptor field, std::size_t length)
    : field_(std::move(field)), length_(length) {}

std::pair<std::vector<Scalar>, std::vector<Scalar>> EchelonBasis::reduce(
    std::span<const Scalar> v) const {
  if (v.size() != length_) raise(ErrorKind::InvalidArgument, "vector length does not match");
  std::vector<Scalar> w(v.begin(), v.end());
  std::vector<Scalar> coeffs(inserted_, Scalar::zero(field_));
  for (const auto& row : rows_) {
    if (w[row.pivot].is_zero()) continue;
    Scalar f = w[row.pivot] / row.values[row.pivot];
    for (std::size_t j = row.pivot; j < length_; ++j) {
      if (!row.values[j].is_zero()) w[j] -= f * row.values[j];
    }
    for (std::size_t k = 0; k < row.combination.size(); ++k) {
      if (!row.combination[k].is_zero()) coeffs[k] += f * row.combination[k];
    }
  }
  return {std::move(w), std::move(coeffs)};
}

std::optional<std::vector<Scalar>> EchelonBasis::express(std::span<const Scalar> v) const {
  auto [w, coeffs] = reduce(v);
  for (const auto& x : w) {
    if (!x.is_zero()) return std::nullopt;
  }
  return coeffs;
}

std::optional<std::vector<Scalar>> EchelonBasis::insert(std::span<const Scalar> v) {
  auto [w, coeffs] = reduce(v);
  std::size_t pivot = length_;
  for (std::size_t j = 0; j < length_; ++j) {
    if (!w[j].is_zero()) {
      pivot = j;
      break;
    }
  }
  if (pivot == length_) return coeffs;
  Row row;
  row.values = std::move(w);
  row.pivot = pivot;
  row.combination.reserve(inserted_ + 1);
  for (auto& c : coeffs) row.combination.push_back(-c);
  row.combination.push_back(Scalar::one(field_));
  rows_.push_back(std::move(row));
  ++inserted_;
  return std::nullopt;
}

}  // namespace zdci
