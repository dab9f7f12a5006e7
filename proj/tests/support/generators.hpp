#pragma once

#include "rly/error.hpp"
#include "rly/extension.hpp"
#include "rly/linalg.hpp"

#include <random>
#include <string>

namespace rly::testgen {

using Rng = std::mt19937_64;

inline long uniform_int(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

/// Small rational with numerator in [-3, 3] and denominator in [1, 3].
inline Scalar small_scalar(Rng& rng) {
  Scalar s(uniform_int(rng, -3, 3), uniform_int(rng, 1, 3));
  s.canonicalize();
  return s;
}

inline Scalar nonzero_scalar(Rng& rng) {
  for (;;) {
    Scalar s = small_scalar(rng);
    if (!is_zero(s)) return s;
  }
}

inline Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, long lo = -2, long hi = 2) {
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = uniform_int(rng, lo, hi);
  return m;
}

inline Matrix random_invertible(Rng& rng, std::size_t n) {
  for (;;) {
    Matrix m = random_matrix(rng, n, n);
    if (rank(m) == n) return m;
  }
}

inline Vec random_vec(Rng& rng, std::size_t n) {
  Vec v(n);
  for (auto& s : v) s = uniform_int(rng, -2, 2);
  return v;
}

/// Random combination of basis vectors, nonzero when the basis is nonempty.
inline Vec random_combination(Rng& rng, const SubspaceBasis& b) {
  for (;;) {
    Vec v = zero_vec(b.ambient_dim);
    for (const auto& bv : b.vectors) axpy(v, Scalar(uniform_int(rng, -2, 2)), bv);
    if (b.vectors.empty() || !is_zero(v)) return v;
  }
}

inline Tensor lie_tensor(std::size_t n, std::initializer_list<std::tuple<std::size_t, std::size_t, std::size_t, long>> entries) {
  Tensor t({n, n, n});
  for (auto [i, j, k, v] : entries) {
    t(i, j, k) = v;
    t(j, i, k) = -v;
  }
  return t;
}

/// Lie-Yamaguti algebras of dimension at most three, Lie and non-Lie.
inline std::vector<std::pair<std::string, LyAlgebra>> algebra_pool() {
  return {
      {"abelian1", LyAlgebra::abelian(1)},
      {"abelian2", LyAlgebra::abelian(2)},
      {"abelian3", LyAlgebra::abelian(3)},
      {"r2", from_lie_algebra(lie_tensor(2, {{0, 1, 0, 1}}))},
      {"heisenberg", from_lie_algebra(lie_tensor(3, {{0, 1, 2, 1}}))},
      {"r3", from_lie_algebra(lie_tensor(3, {{2, 0, 0, 1}, {2, 1, 1, 1}}))},
      {"so3", from_lie_algebra(lie_tensor(3, {{0, 1, 2, 1}, {1, 2, 0, 1}, {2, 0, 1, 1}}))},
      {"sl2", examples::sl2()},
      {"two_dim", examples::two_dim()},
      {"reductive_sl2", from_reductive_pair(examples::sl2_lie_binary(), {0}, {1, 2})},
      {"leibniz", from_leibniz(examples::leibniz_sample())},
  };
}

struct Triple {
  std::string label;
  LyAlgebra a;
  ReynoldsOperator r;
  Representation rep;
};

/// Reynolds operator from one of three families: (D - w Id)^{-1} for a
/// derivation D, c Id with weight -1/c, or zero at any weight.
inline ReynoldsOperator random_operator(Rng& rng, const LyAlgebra& a, std::string& label) {
  const std::size_t n = a.dim();
  for (;;) {
    switch (uniform_int(rng, 0, 2)) {
      case 0: {
        auto ds = derivation_space(a);
        Matrix d(n, n);
        for (const auto& b : ds) d = d + Scalar(uniform_int(rng, -2, 2)) * b;
        Scalar w = uniform_int(rng, 0, 3) == 0 ? Scalar(0) : nonzero_scalar(rng);
        if (rank(d - w * Matrix::identity(n)) < n) continue;
        label += "/derivation";
        return reynolds_from_derivation(a, d, w);
      }
      case 1: {
        Scalar c = nonzero_scalar(rng);
        label += "/scaled_identity";
        return {c * Matrix::identity(n), Scalar(-1) / c};
      }
      default:
        label += "/zero";
        return {Matrix(n, n), small_scalar(rng)};
    }
  }
}

/// Valid (algebra, operator, representation) with dim L <= 3 and dim V <= 3:
/// a pool algebra under a random change of basis, an operator from
/// random_operator, and the adjoint, a zero module with random T_V, a direct
/// sum of those, or a conjugate.
inline Triple random_triple(Rng& rng) {
  auto pool = algebra_pool();
  auto& [name, base] = pool[uniform_int(rng, 0, static_cast<long>(pool.size()) - 1)];
  const std::size_t n = base.dim();
  Triple t{name, change_basis(base, random_invertible(rng, n)), {}, {}};
  t.r = random_operator(rng, t.a, t.label);
  Representation ad = adjoint_rep(t.a, t.r);
  auto zero_rep = [&](std::size_t m) { return Representation::zero(n, m, random_matrix(rng, m, m)); };
  switch (uniform_int(rng, 0, 3)) {
    case 0:
      t.rep = ad;
      t.label += "/adjoint";
      break;
    case 1:
      t.rep = zero_rep(uniform_int(rng, 1, 2));
      t.label += "/zero";
      break;
    case 2:
      if (n < 3) {
        t.rep = direct_sum_rep({ad, zero_rep(1)});
        t.label += "/adjoint+zero";
      } else {
        t.rep = direct_sum_rep({zero_rep(1), zero_rep(2)});
        t.label += "/zero+zero";
      }
      break;
    default:
      t.rep = conjugate_rep(ad, random_invertible(rng, n));
      t.label += "/conjugate_adjoint";
      break;
  }
  return t;
}

}  // namespace rly::testgen
