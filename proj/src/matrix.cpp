#include "rly/matrix.hpp"

#include "rly/error.hpp"
#include "rly/linalg.hpp"

#include <numeric>

namespace rly {

Vec zero_vec(std::size_t n) { return Vec(n); }

Vec unit_vec(std::size_t n, std::size_t i) {
  Vec v(n);
  v.at(i) = 1;
  return v;
}

bool is_zero(std::span<const Scalar> v) {
  for (const auto& s : v)
    if (!is_zero(s)) return false;
  return true;
}

void axpy(Vec& acc, const Scalar& c, std::span<const Scalar> v) {
  require(acc.size() == v.size(), ErrorCode::DimMismatch, "axpy length mismatch");
  if (is_zero(c)) return;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!is_zero(v[i])) acc[i] += c * v[i];
}

Vec operator+(const Vec& a, const Vec& b) {
  Vec r = a;
  axpy(r, 1, b);
  return r;
}

Vec operator-(const Vec& a, const Vec& b) {
  Vec r = a;
  axpy(r, -1, b);
  return r;
}

Vec operator*(const Scalar& c, const Vec& v) {
  Vec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
  return r;
}

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  require(data_.size() == rows * cols, ErrorCode::ShapeMismatch, "matrix entry count != rows*cols");
}

Matrix::Matrix(std::initializer_list<std::initializer_list<Scalar>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    require(r.size() == cols_, ErrorCode::ShapeMismatch, "ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_columns(std::size_t rows, const std::vector<Vec>& columns) {
  Matrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) m.set_column(c, columns[c]);
  return m;
}

Matrix Matrix::vstack(const Matrix& top, const Matrix& bottom) {
  require(top.cols_ == bottom.cols_, ErrorCode::DimMismatch, "vstack column mismatch");
  Matrix m(top.rows_ + bottom.rows_, top.cols_);
  m.set_block(0, 0, top);
  m.set_block(top.rows_, 0, bottom);
  return m;
}

Matrix Matrix::hstack(const Matrix& left, const Matrix& right) {
  require(left.rows_ == right.rows_, ErrorCode::DimMismatch, "hstack row mismatch");
  Matrix m(left.rows_, left.cols_ + right.cols_);
  m.set_block(0, 0, left);
  m.set_block(0, left.cols_, right);
  return m;
}

Vec Matrix::column(std::size_t c) const {
  Vec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

void Matrix::set_column(std::size_t c, std::span<const Scalar> v) {
  require(v.size() == rows_, ErrorCode::DimMismatch, "column length mismatch");
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
  require(r0 + b.rows_ <= rows_ && c0 + b.cols_ <= cols_, ErrorCode::DimMismatch,
          "block does not fit");
  for (std::size_t r = 0; r < b.rows_; ++r)
    for (std::size_t c = 0; c < b.cols_; ++c) (*this)(r0 + r, c0 + c) = b(r, c);
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols) const {
  require(r0 + rows <= rows_ && c0 + cols <= cols_, ErrorCode::DimMismatch, "block out of range");
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = (*this)(r0 + r, c0 + c);
  return m;
}

Vec Matrix::apply(std::span<const Scalar> v) const {
  require(v.size() == cols_, ErrorCode::DimMismatch, "matrix-vector length mismatch");
  Vec out(rows_);
  for (std::size_t c = 0; c < cols_; ++c) {
    if (rly::is_zero(v[c])) continue;
    for (std::size_t r = 0; r < rows_; ++r) {
      const Scalar& a = (*this)(r, c);
      if (!rly::is_zero(a)) out[r] += a * v[c];
    }
  }
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool Matrix::is_zero() const { return rly::is_zero(std::span<const Scalar>(data_)); }

Matrix Matrix::inverse() const {
  require(is_square(), ErrorCode::DimMismatch, "inverse of non-square matrix");
  const std::size_t n = rows_;
  Matrix aug = hstack(*this, identity(n));
  auto echelon = row_reduce(aug);
  for (std::size_t i = 0; i < n; ++i)
    if (i >= echelon.pivots.size() || echelon.pivots[i] != i)
      fail(ErrorCode::SingularMatrix, "matrix is not invertible");
  return echelon.reduced.block(0, n, n, n);
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  require(a.rows() == b.rows() && a.cols() == b.cols(), ErrorCode::DimMismatch, "matrix + shape");
  std::vector<Scalar> e(a.entries().size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = a.entries()[i] + b.entries()[i];
  return Matrix(a.rows(), a.cols(), std::move(e));
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  require(a.rows() == b.rows() && a.cols() == b.cols(), ErrorCode::DimMismatch, "matrix - shape");
  std::vector<Scalar> e(a.entries().size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = a.entries()[i] - b.entries()[i];
  return Matrix(a.rows(), a.cols(), std::move(e));
}

Matrix operator-(const Matrix& a) { return Scalar(-1) * a; }

Matrix operator*(const Matrix& a, const Matrix& b) {
  require(a.cols() == b.rows(), ErrorCode::DimMismatch, "matrix product shape");
  Matrix m(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Scalar& x = a(i, k);
      if (is_zero(x)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const Scalar& y = b(k, j);
        if (!is_zero(y)) m(i, j) += x * y;
      }
    }
  return m;
}

Matrix operator*(const Scalar& c, const Matrix& a) {
  std::vector<Scalar> e(a.entries().size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = c * a.entries()[i];
  return Matrix(a.rows(), a.cols(), std::move(e));
}

Tensor::Tensor(std::vector<std::size_t> shape) : shape_(std::move(shape)) {
  std::size_t n = 1;
  for (auto s : shape_) n *= s;
  data_.resize(n);
}

std::size_t Tensor::offset(std::span<const std::size_t> idx) const {
  require(idx.size() == shape_.size(), ErrorCode::ShapeMismatch, "tensor index arity");
  std::size_t off = 0;
  for (std::size_t k = 0; k < idx.size(); ++k) {
    require(idx[k] < shape_[k], ErrorCode::IndexOutOfRange, "tensor index out of range");
    off = off * shape_[k] + idx[k];
  }
  return off;
}

std::span<const Scalar> Tensor::fiber(std::span<const std::size_t> leading) const {
  require(leading.size() + 1 == shape_.size(), ErrorCode::ShapeMismatch, "fiber arity");
  std::size_t off = 0;
  for (std::size_t k = 0; k < leading.size(); ++k) {
    require(leading[k] < shape_[k], ErrorCode::IndexOutOfRange, "fiber index out of range");
    off = off * shape_[k] + leading[k];
  }
  const std::size_t len = shape_.back();
  return {data_.data() + off * len, len};
}

std::span<Scalar> Tensor::fiber(std::span<const std::size_t> leading) {
  const auto c = static_cast<const Tensor&>(*this).fiber(leading);
  return {data_.data() + (c.data() - data_.data()), c.size()};
}

bool Tensor::is_zero() const { return rly::is_zero(std::span<const Scalar>(data_)); }

namespace {

Tensor combine(const Tensor& a, const Tensor& b, int sign) {
  require(a.shape() == b.shape(), ErrorCode::ShapeMismatch, "tensor shapes differ");
  Tensor r(a.shape());
  auto& rd = r.data();
  for (std::size_t i = 0; i < rd.size(); ++i)
    rd[i] = sign > 0 ? Scalar(a.data()[i] + b.data()[i]) : Scalar(a.data()[i] - b.data()[i]);
  return r;
}

}  // namespace

Tensor operator+(const Tensor& a, const Tensor& b) { return combine(a, b, 1); }
Tensor operator-(const Tensor& a, const Tensor& b) { return combine(a, b, -1); }

Tensor operator*(const Scalar& c, const Tensor& a) {
  Tensor r(a.shape());
  auto& rd = r.data();
  for (std::size_t i = 0; i < rd.size(); ++i) rd[i] = c * a.data()[i];
  return r;
}

Vec contract(const Tensor& t, std::span<const Scalar> x, std::span<const Scalar> y) {
  require(t.rank() == 3 && x.size() == t.shape()[0] && y.size() == t.shape()[1],
          ErrorCode::DimMismatch, "bilinear contraction shape");
  Vec out(t.shape()[2]);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (is_zero(x[i])) continue;
    for (std::size_t j = 0; j < y.size(); ++j) {
      if (is_zero(y[j])) continue;
      const std::size_t lead[] = {i, j};
      axpy(out, x[i] * y[j], t.fiber(lead));
    }
  }
  return out;
}

Vec contract(const Tensor& t, std::span<const Scalar> x, std::span<const Scalar> y,
             std::span<const Scalar> z) {
  require(t.rank() == 4 && x.size() == t.shape()[0] && y.size() == t.shape()[1] &&
              z.size() == t.shape()[2],
          ErrorCode::DimMismatch, "trilinear contraction shape");
  Vec out(t.shape()[3]);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (is_zero(x[i])) continue;
    for (std::size_t j = 0; j < y.size(); ++j) {
      if (is_zero(y[j])) continue;
      Scalar xy = x[i] * y[j];
      for (std::size_t k = 0; k < z.size(); ++k) {
        if (is_zero(z[k])) continue;
        const std::size_t lead[] = {i, j, k};
        axpy(out, xy * z[k], t.fiber(lead));
      }
    }
  }
  return out;
}

}  // namespace rly
