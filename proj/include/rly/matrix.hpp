#pragma once

#include "rly/scalar.hpp"

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace rly {

/// Dense coordinate vector.
using Vec = std::vector<Scalar>;

Vec zero_vec(std::size_t n);
Vec unit_vec(std::size_t n, std::size_t i);
bool is_zero(std::span<const Scalar> v);
/// acc += c * v
void axpy(Vec& acc, const Scalar& c, std::span<const Scalar> v);
Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(const Scalar& c, const Vec& v);

/// Dense row-major rational matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries);
  Matrix(std::initializer_list<std::initializer_list<Scalar>> rows);

  static Matrix identity(std::size_t n);
  /// Builds a matrix whose columns are the given vectors, each of length `rows`.
  static Matrix from_columns(std::size_t rows, const std::vector<Vec>& columns);
  static Matrix vstack(const Matrix& top, const Matrix& bottom);
  static Matrix hstack(const Matrix& left, const Matrix& right);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Scalar> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  Vec column(std::size_t c) const;
  void set_column(std::size_t c, std::span<const Scalar> v);
  /// Copies `block` with its top-left corner at (r0, c0).
  void set_block(std::size_t r0, std::size_t c0, const Matrix& block);
  Matrix block(std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols) const;

  const std::vector<Scalar>& entries() const { return data_; }

  Vec apply(std::span<const Scalar> v) const;
  Matrix transpose() const;
  bool is_zero() const;
  /// Throws SingularMatrix when not invertible, DimMismatch when not square.
  Matrix inverse() const;

  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator*(const Scalar& c, const Matrix& a);

/// Dense multi-index array of scalars, last index fastest.
class Tensor {
 public:
  Tensor() = default;
  explicit Tensor(std::vector<std::size_t> shape);

  const std::vector<std::size_t>& shape() const { return shape_; }
  std::size_t rank() const { return shape_.size(); }
  std::size_t size() const { return data_.size(); }

  template <class... I>
  Scalar& operator()(I... idx) {
    return data_[offset({static_cast<std::size_t>(idx)...})];
  }
  template <class... I>
  const Scalar& operator()(I... idx) const {
    return data_[offset({static_cast<std::size_t>(idx)...})];
  }

  Scalar& at(std::span<const std::size_t> idx) { return data_[offset(idx)]; }
  const Scalar& at(std::span<const std::size_t> idx) const { return data_[offset(idx)]; }

  /// Contiguous run of the last index for fixed leading indices.
  std::span<const Scalar> fiber(std::span<const std::size_t> leading) const;
  std::span<Scalar> fiber(std::span<const std::size_t> leading);

  const std::vector<Scalar>& data() const { return data_; }
  std::vector<Scalar>& data() { return data_; }
  bool is_zero() const;

  friend bool operator==(const Tensor& a, const Tensor& b) = default;

 private:
  std::size_t offset(std::span<const std::size_t> idx) const;
  std::size_t offset(std::initializer_list<std::size_t> idx) const {
    return offset(std::span<const std::size_t>(idx.begin(), idx.size()));
  }

  std::vector<std::size_t> shape_;
  std::vector<Scalar> data_;
};

Tensor operator+(const Tensor& a, const Tensor& b);
Tensor operator-(const Tensor& a, const Tensor& b);
Tensor operator*(const Scalar& c, const Tensor& a);

/// Bilinear contraction: out_k = sum_ij x_i y_j t(i,j,k).
Vec contract(const Tensor& t, std::span<const Scalar> x, std::span<const Scalar> y);
/// Trilinear contraction: out_l = sum_ijk x_i y_j z_k t(i,j,k,l).
Vec contract(const Tensor& t, std::span<const Scalar> x, std::span<const Scalar> y,
             std::span<const Scalar> z);

}  // namespace rly
