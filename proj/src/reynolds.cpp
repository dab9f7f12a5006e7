#include "rly/reynolds.hpp"

#include "rly/error.hpp"
#include "rly/linalg.hpp"

namespace rly {

namespace {

void require_square(const LyAlgebra& a, const Matrix& m) {
  require(m.rows() == a.dim() && m.cols() == a.dim(), ErrorCode::DimMismatch,
          "operator matrix side differs from algebra dimension");
}

std::vector<Vec> images(const Matrix& m) {
  std::vector<Vec> out(m.cols());
  for (std::size_t i = 0; i < m.cols(); ++i) out[i] = m.column(i);
  return out;
}

}  // namespace

AxiomReport verify_reynolds(const LyAlgebra& a, const ReynoldsOperator& r) {
  require_square(a, r.matrix);
  const std::size_t n = a.dim();
  const Scalar& w = r.weight;
  auto tx = images(r.matrix);
  AxiomReport rep;
  auto& c1 = rep.add(axiom::kReynoldsBinary);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec ei = unit_vec(n, i), ej = unit_vec(n, j);
      Vec lhs = a.bracket2(tx[i], tx[j]);
      Vec inner = a.bracket2(tx[i], ej) + a.bracket2(ei, tx[j]) + w * lhs;
      c1.record(std::vector{i, j}, lhs - r.apply(inner));
    }
  auto& c2 = rep.add(axiom::kReynoldsTernary);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vec ei = unit_vec(n, i), ej = unit_vec(n, j), ek = unit_vec(n, k);
        Vec lhs = a.bracket3(tx[i], tx[j], tx[k]);
        Vec inner = a.bracket3(ei, tx[j], tx[k]) + a.bracket3(tx[i], ej, tx[k]) + a.bracket3(tx[i], tx[j], ek) +
                    (2 * w) * lhs;
        c2.record(std::vector{i, j, k}, lhs - r.apply(inner));
      }
  return rep;
}

ReynoldsOperator scale_weight(const ReynoldsOperator& r, const Scalar& c) {
  require(!is_zero(c), ErrorCode::ZeroScale, "scale factor is zero");
  return {c * r.matrix, r.weight / c};
}

LyAlgebra descendant_brackets(const LyAlgebra& a, const ReynoldsOperator& r) {
  require_square(a, r.matrix);
  const std::size_t n = a.dim();
  const Scalar& w = r.weight;
  auto tx = images(r.matrix);
  Tensor bin({n, n, n});
  Tensor tern({n, n, n, n});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec ei = unit_vec(n, i), ej = unit_vec(n, j);
      Vec v = a.bracket2(tx[i], ej) + a.bracket2(ei, tx[j]) + w * a.bracket2(tx[i], tx[j]);
      for (std::size_t k = 0; k < n; ++k) bin(i, j, k) = v[k];
      for (std::size_t k = 0; k < n; ++k) {
        Vec ek = unit_vec(n, k);
        Vec u = a.bracket3(ei, tx[j], tx[k]) + a.bracket3(tx[i], ej, tx[k]) + a.bracket3(tx[i], tx[j], ek) +
                (2 * w) * a.bracket3(tx[i], tx[j], tx[k]);
        for (std::size_t l = 0; l < n; ++l) tern(i, j, k, l) = u[l];
      }
    }
  return LyAlgebra(n, std::move(bin), std::move(tern), a.labels());
}

LyAlgebra descendant_algebra(const LyAlgebra& a, const ReynoldsOperator& r) {
  auto check = verify_reynolds(a, r);
  if (!check.passed()) fail(ErrorCode::InvalidReynolds, "operator fails " + check.first_failure()->name);
  LyAlgebra lt = descendant_brackets(a, r);
  auto ax = verify_ly_axioms(lt);
  if (!ax.passed())
    fail(ErrorCode::InternalInconsistency, "descendant algebra fails " + ax.first_failure()->name);
  auto mor = verify_morphism(lt, a, r.matrix);
  if (!mor.passed())
    fail(ErrorCode::InternalInconsistency, "operator is not a morphism from the descendant algebra");
  return lt;
}

AxiomReport derivation_check(const LyAlgebra& a, const Matrix& d) {
  require_square(a, d);
  const std::size_t n = a.dim();
  auto dx = images(d);
  AxiomReport rep;
  auto& c1 = rep.add("derivation_binary");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec ei = unit_vec(n, i), ej = unit_vec(n, j);
      c1.record(std::vector{i, j},
                d.apply(a.basis_bracket2(i, j)) - a.bracket2(dx[i], ej) - a.bracket2(ei, dx[j]));
    }
  auto& c2 = rep.add("derivation_ternary");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vec ei = unit_vec(n, i), ej = unit_vec(n, j), ek = unit_vec(n, k);
        c2.record(std::vector{i, j, k}, d.apply(a.basis_bracket3(i, j, k)) - a.bracket3(dx[i], ej, ek) -
                                            a.bracket3(ei, dx[j], ek) - a.bracket3(ei, ej, dx[k]));
      }
  return rep;
}

std::vector<Matrix> derivation_space(const LyAlgebra& a) {
  // Unknowns d(r,c) at index r*n + c. Each identity is linear in d.
  const std::size_t n = a.dim();
  const std::size_t unknowns = n * n;
  auto basis_matrix = [&](std::size_t u) {
    Matrix m(n, n);
    m(u / n, u % n) = 1;
    return m;
  };
  std::vector<Vec> cols;
  for (std::size_t u = 0; u < unknowns; ++u) {
    Matrix d = basis_matrix(u);
    // Column u: every residual of both identities for d = E_u.
    Vec col;
    auto dx = images(d);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Vec ei = unit_vec(n, i), ej = unit_vec(n, j);
        Vec r = d.apply(a.basis_bracket2(i, j)) - a.bracket2(dx[i], ej) - a.bracket2(ei, dx[j]);
        col.insert(col.end(), r.begin(), r.end());
        for (std::size_t k = 0; k < n; ++k) {
          Vec ek = unit_vec(n, k);
          Vec s = d.apply(a.basis_bracket3(i, j, k)) - a.bracket3(dx[i], ej, ek) - a.bracket3(ei, dx[j], ek) -
                  a.bracket3(ei, ej, dx[k]);
          col.insert(col.end(), s.begin(), s.end());
        }
      }
    cols.push_back(std::move(col));
  }
  std::vector<Matrix> out;
  if (unknowns == 0) return out;
  Matrix constraints = Matrix::from_columns(cols.front().size(), cols);
  for (const Vec& v : kernel_basis(constraints).vectors) out.emplace_back(n, n, v);
  return out;
}

ReynoldsOperator reynolds_from_derivation(const LyAlgebra& a, const Matrix& d, const Scalar& weight) {
  auto check = derivation_check(a, d);
  if (!check.passed()) fail(ErrorCode::NotDerivation, "matrix fails " + check.first_failure()->name);
  Matrix shifted = d - weight * Matrix::identity(a.dim());
  return {shifted.inverse(), weight};
}

}  // namespace rly
