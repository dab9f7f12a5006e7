#pragma once

#include "rly/matrix.hpp"

#include <optional>

namespace rly {

/// Reduced row-echelon form. Pivoting is deterministic: in each column the
/// first row (top-down) with a nonzero entry is chosen.
struct RowEchelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
  std::size_t rank() const { return pivots.size(); }
};

RowEchelon row_reduce(Matrix m);

std::size_t rank(const Matrix& m);

/// Linearly independent vectors spanning a subspace of K^ambient_dim.
struct SubspaceBasis {
  std::size_t ambient_dim = 0;
  std::vector<Vec> vectors;

  std::size_t dim() const { return vectors.size(); }
  Matrix as_columns() const { return Matrix::from_columns(ambient_dim, vectors); }
};

/// Basis of {v : m v = 0}, one vector per free column of the RREF in
/// increasing column order, with the free coordinate set to 1.
SubspaceBasis kernel_basis(const Matrix& m);

/// Basis of the column space, taken from the pivot columns of `m`.
SubspaceBasis image_basis(const Matrix& m);

/// dim ker(outgoing) - rank(incoming). Throws CompositionNotZero when
/// outgoing * incoming != 0.
std::size_t quotient_dim(const Matrix& outgoing, const Matrix& incoming);

/// Some x with m x = b (free variables set to zero), or nullopt.
std::optional<Vec> solve(const Matrix& m, std::span<const Scalar> b);

bool in_column_space(const Matrix& m, std::span<const Scalar> v);

}  // namespace rly
