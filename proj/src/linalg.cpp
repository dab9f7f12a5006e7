#include "rly/linalg.hpp"

#include "rly/error.hpp"

#include <utility>

namespace rly {

namespace {

void swap_rows(Matrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(a, c), m(b, c));
}

// Forward elimination (full = false) or Gauss-Jordan (full = true).
RowEchelon eliminate(Matrix m, bool full) {
  RowEchelon out;
  std::size_t row = 0;
  const std::size_t rows = m.rows(), cols = m.cols();
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t pivot = row;
    while (pivot < rows && is_zero(m(pivot, col))) ++pivot;
    if (pivot == rows) continue;
    swap_rows(m, row, pivot);

    const Scalar inv = 1 / m(row, col);
    for (std::size_t c = col; c < cols; ++c)
      if (!is_zero(m(row, c))) m(row, c) *= inv;

    for (std::size_t r = full ? 0 : row + 1; r < rows; ++r) {
      if (r == row || is_zero(m(r, col))) continue;
      const Scalar factor = m(r, col);
      for (std::size_t c = col; c < cols; ++c)
        if (!is_zero(m(row, c))) m(r, c) -= factor * m(row, c);
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.reduced = std::move(m);
  return out;
}

}  // namespace

RowEchelon row_reduce(Matrix m) { return eliminate(std::move(m), true); }

std::size_t rank(const Matrix& m) {
  if (m.rows() > m.cols()) return eliminate(m.transpose(), false).rank();
  return eliminate(m, false).rank();
}

SubspaceBasis kernel_basis(const Matrix& m) {
  const auto e = row_reduce(m);
  SubspaceBasis basis{m.cols(), {}};
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec v(m.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, free);
    basis.vectors.push_back(std::move(v));
  }
  return basis;
}

SubspaceBasis image_basis(const Matrix& m) {
  const auto e = eliminate(m, false);
  SubspaceBasis basis{m.rows(), {}};
  for (auto p : e.pivots) basis.vectors.push_back(m.column(p));
  return basis;
}

std::size_t quotient_dim(const Matrix& outgoing, const Matrix& incoming) {
  require(outgoing.cols() == incoming.rows(), ErrorCode::DimMismatch,
          "outgoing and incoming differentials do not compose");
  if (!(outgoing * incoming).is_zero())
    fail(ErrorCode::CompositionNotZero, "outgoing * incoming != 0");
  return outgoing.cols() - rank(outgoing) - rank(incoming);
}

std::optional<Vec> solve(const Matrix& m, std::span<const Scalar> b) {
  require(b.size() == m.rows(), ErrorCode::DimMismatch, "right-hand side length");
  Matrix aug(m.rows(), m.cols() + 1);
  aug.set_block(0, 0, m);
  for (std::size_t r = 0; r < m.rows(); ++r) aug(r, m.cols()) = b[r];
  const auto e = row_reduce(std::move(aug));
  if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
  Vec x(m.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.reduced(r, m.cols());
  return x;
}

bool in_column_space(const Matrix& m, std::span<const Scalar> v) { return solve(m, v).has_value(); }

}  // namespace rly
