#include "rly/ly_algebra.hpp"

#include "rly/error.hpp"

#include <algorithm>

namespace rly {

namespace {

void require_shape(const Tensor& t, std::size_t n, std::size_t rank, const char* what) {
  require(t.rank() == rank && std::all_of(t.shape().begin(), t.shape().end(),
                                          [n](std::size_t s) { return s == n; }),
          ErrorCode::ShapeMismatch, std::string(what) + " tensor has the wrong shape");
}

std::size_t cube_side(const Tensor& t) { return t.rank() == 0 ? 0 : t.shape()[0]; }

// Basis-level brackets, cached once for the axiom loops.
struct BasisTable {
  std::size_t n;
  std::vector<Vec> b2;  // n*n
  std::vector<Vec> b3;  // n*n*n

  explicit BasisTable(const LyAlgebra& a) : n(a.dim()) {
    b2.reserve(n * n);
    b3.reserve(n * n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        b2.push_back(a.basis_bracket2(i, j));
        for (std::size_t k = 0; k < n; ++k) b3.push_back(a.basis_bracket3(i, j, k));
      }
  }
  const Vec& br(std::size_t i, std::size_t j) const { return b2[i * n + j]; }
  const Vec& tr(std::size_t i, std::size_t j, std::size_t k) const { return b3[(i * n + j) * n + k]; }
};

// [v, e_k] and [e_k, v] etc. for a vector v, via linearity.
Vec br_left(const BasisTable& t, const Vec& v, std::size_t k) {
  Vec out = zero_vec(t.n);
  for (std::size_t i = 0; i < t.n; ++i)
    if (!is_zero(v[i])) axpy(out, v[i], t.br(i, k));
  return out;
}
Vec br_right(const BasisTable& t, std::size_t k, const Vec& v) {
  Vec out = zero_vec(t.n);
  for (std::size_t i = 0; i < t.n; ++i)
    if (!is_zero(v[i])) axpy(out, v[i], t.br(k, i));
  return out;
}
Vec tr_slot(const BasisTable& t, const Vec& v, std::size_t slot, std::size_t p, std::size_t q) {
  Vec out = zero_vec(t.n);
  for (std::size_t i = 0; i < t.n; ++i) {
    if (is_zero(v[i])) continue;
    const Vec& w = slot == 0 ? t.tr(i, p, q) : slot == 1 ? t.tr(p, i, q) : t.tr(p, q, i);
    axpy(out, v[i], w);
  }
  return out;
}

}  // namespace

LyAlgebra::LyAlgebra(std::size_t dim, Tensor binary, Tensor ternary, std::vector<std::string> labels)
    : dim_(dim), binary_(std::move(binary)), ternary_(std::move(ternary)), labels_(std::move(labels)) {
  require_shape(binary_, dim_, 3, "binary");
  require_shape(ternary_, dim_, 4, "ternary");
  require(labels_.empty() || labels_.size() == dim_, ErrorCode::DimMismatch,
          "label count differs from dimension");
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      for (std::size_t k = 0; k < dim_; ++k) {
        require(binary_(i, j, k) == -binary_(j, i, k), ErrorCode::InvalidInput,
                "binary bracket is not antisymmetric at (" + std::to_string(i) + "," + std::to_string(j) + ")");
        for (std::size_t l = 0; l < dim_; ++l)
          require(ternary_(i, j, k, l) == -ternary_(j, i, k, l), ErrorCode::InvalidInput,
                  "ternary bracket is not antisymmetric at (" + std::to_string(i) + "," + std::to_string(j) +
                      "," + std::to_string(k) + ")");
      }
}

LyAlgebra LyAlgebra::abelian(std::size_t dim) {
  return LyAlgebra(dim, Tensor({dim, dim, dim}), Tensor({dim, dim, dim, dim}));
}

Vec LyAlgebra::bracket2(std::span<const Scalar> x, std::span<const Scalar> y) const {
  require(x.size() == dim_ && y.size() == dim_, ErrorCode::DimMismatch, "bracket2 argument length");
  return contract(binary_, x, y);
}

Vec LyAlgebra::bracket3(std::span<const Scalar> x, std::span<const Scalar> y, std::span<const Scalar> z) const {
  require(x.size() == dim_ && y.size() == dim_ && z.size() == dim_, ErrorCode::DimMismatch,
          "bracket3 argument length");
  return contract(ternary_, x, y, z);
}

Vec LyAlgebra::basis_bracket2(std::size_t i, std::size_t j) const {
  require(i < dim_ && j < dim_, ErrorCode::IndexOutOfRange, "basis index");
  std::size_t lead[] = {i, j};
  auto f = binary_.fiber(lead);
  return Vec(f.begin(), f.end());
}

Vec LyAlgebra::basis_bracket3(std::size_t i, std::size_t j, std::size_t k) const {
  require(i < dim_ && j < dim_ && k < dim_, ErrorCode::IndexOutOfRange, "basis index");
  std::size_t lead[] = {i, j, k};
  auto f = ternary_.fiber(lead);
  return Vec(f.begin(), f.end());
}

AxiomReport verify_ly_axioms(const LyAlgebra& a) {
  const std::size_t n = a.dim();
  BasisTable t(a);
  AxiomReport rep;

  auto& c1 = rep.add(axiom::kBinaryAntisymmetry);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) c1.record(std::vector{x, y}, t.br(x, y) + t.br(y, x));

  auto& c2 = rep.add(axiom::kTernaryAntisymmetry);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) c2.record(std::vector{x, y, z}, t.tr(x, y, z) + t.tr(y, x, z));

  auto& c3 = rep.add(axiom::kCyclicJacobi);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        Vec r = br_left(t, t.br(x, y), z) + br_left(t, t.br(y, z), x) + br_left(t, t.br(z, x), y);
        r = r + t.tr(x, y, z) + t.tr(y, z, x) + t.tr(z, x, y);
        c3.record(std::vector{x, y, z}, r);
      }

  auto& c4 = rep.add(axiom::kCyclicTernary);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        for (std::size_t w = 0; w < n; ++w) {
          Vec r = tr_slot(t, t.br(x, y), 0, z, w) + tr_slot(t, t.br(y, z), 0, x, w) +
                  tr_slot(t, t.br(z, x), 0, y, w);
          c4.record(std::vector{x, y, z, w}, r);
        }

  auto& c5 = rep.add(axiom::kTernaryDerivesBinary);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
          Vec lhs = tr_slot(t, t.br(x, y), 2, p, q);
          Vec rhs = br_left(t, t.tr(p, q, x), y) + br_right(t, x, t.tr(p, q, y));
          c5.record(std::vector{p, q, x, y}, lhs - rhs);
        }

  auto& c6 = rep.add(axiom::kTernaryDerivesTernary);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
          for (std::size_t z = 0; z < n; ++z) {
            Vec lhs = tr_slot(t, t.tr(x, y, z), 2, p, q);
            Vec rhs = tr_slot(t, t.tr(p, q, x), 0, y, z) + tr_slot(t, t.tr(p, q, y), 1, x, z) +
                      tr_slot(t, t.tr(p, q, z), 2, x, y);
            c6.record(std::vector{p, q, x, y, z}, lhs - rhs);
          }
  return rep;
}

AxiomReport verify_morphism(const LyAlgebra& source, const LyAlgebra& target, const Matrix& phi) {
  require(phi.rows() == target.dim() && phi.cols() == source.dim(), ErrorCode::DimMismatch,
          "morphism matrix shape");
  const std::size_t n = source.dim();
  std::vector<Vec> img(n);
  for (std::size_t i = 0; i < n; ++i) img[i] = phi.column(i);
  AxiomReport rep;
  auto& c1 = rep.add("preserves_binary");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      c1.record(std::vector{i, j}, phi.apply(source.basis_bracket2(i, j)) - target.bracket2(img[i], img[j]));
  auto& c2 = rep.add("preserves_ternary");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        c2.record(std::vector{i, j, k},
                  phi.apply(source.basis_bracket3(i, j, k)) - target.bracket3(img[i], img[j], img[k]));
  return rep;
}

namespace {

std::string tuple_text(std::initializer_list<std::size_t> t) {
  std::string s = "(";
  for (auto v : t) s += (s.size() > 1 ? "," : "") + std::to_string(v);
  return s + ")";
}

// Returns the Jacobi witness or throws.
void check_lie(const Tensor& b) {
  require(b.rank() == 3 && b.shape()[1] == b.shape()[0] && b.shape()[2] == b.shape()[0],
          ErrorCode::ShapeMismatch, "Lie bracket tensor shape");
  const std::size_t n = cube_side(b);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (b(i, j, k) != -b(j, i, k))
          fail(ErrorCode::NotLieAlgebra, "antisymmetry fails at " + tuple_text({i, j}));
  auto br = [&](const Vec& v, std::size_t k) {
    Vec out = zero_vec(n);
    for (std::size_t i = 0; i < n; ++i)
      if (!is_zero(v[i])) axpy(out, v[i], b.fiber(std::vector{i, k}));
    return out;
  };
  auto fib = [&](std::size_t i, std::size_t j) {
    auto f = b.fiber(std::vector{i, j});
    return Vec(f.begin(), f.end());
  };
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        if (!is_zero(br(fib(x, y), z) + br(fib(y, z), x) + br(fib(z, x), y)))
          fail(ErrorCode::NotLieAlgebra, "Jacobi identity fails at " + tuple_text({x, y, z}));
}

}  // namespace

LyAlgebra from_lie_algebra(const Tensor& lie_binary) {
  check_lie(lie_binary);
  const std::size_t n = cube_side(lie_binary);
  Tensor tern({n, n, n, n});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t m = 0; m < n; ++m) {
        const Scalar& c = lie_binary(i, j, m);
        if (is_zero(c)) continue;
        for (std::size_t k = 0; k < n; ++k)
          for (std::size_t l = 0; l < n; ++l) tern(i, j, k, l) += c * lie_binary(m, k, l);
      }
  return LyAlgebra(n, lie_binary, std::move(tern));
}

LyAlgebra from_leibniz(const Tensor& star) {
  require(star.rank() == 3 && star.shape()[1] == star.shape()[0] && star.shape()[2] == star.shape()[0],
          ErrorCode::ShapeMismatch, "Leibniz product tensor shape");
  const std::size_t n = cube_side(star);
  auto mul = [&](const Vec& x, const Vec& y) { return contract(star, x, y); };
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        Vec ex = unit_vec(n, x), ey = unit_vec(n, y), ez = unit_vec(n, z);
        Vec r = mul(ex, mul(ey, ez)) - mul(mul(ex, ey), ez) - mul(ey, mul(ex, ez));
        if (!is_zero(r)) fail(ErrorCode::NotLeibniz, "left Leibniz identity fails at " + tuple_text({x, y, z}));
      }
  Tensor bin({n, n, n});
  Tensor tern({n, n, n, n});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        bin(i, j, k) = star(i, j, k) - star(j, i, k);
        Vec prod = mul(mul(unit_vec(n, i), unit_vec(n, j)), unit_vec(n, k));
        for (std::size_t l = 0; l < n; ++l) tern(i, j, k, l) = -prod[l];
      }
  return LyAlgebra(n, std::move(bin), std::move(tern));
}

LyAlgebra from_reductive_pair(const Tensor& lie_binary, const std::vector<std::size_t>& n_indices,
                              const std::vector<std::size_t>& m_indices) {
  check_lie(lie_binary);
  const std::size_t d = cube_side(lie_binary);
  std::vector<int> part(d, -1);
  for (auto i : n_indices) {
    require(i < d && part[i] == -1, ErrorCode::InvalidInput, "split is not a partition of the basis");
    part[i] = 0;
  }
  std::vector<std::size_t> pos(d, 0);
  for (std::size_t p = 0; p < m_indices.size(); ++p) {
    auto i = m_indices[p];
    require(i < d && part[i] == -1, ErrorCode::InvalidInput, "split is not a partition of the basis");
    part[i] = 1;
    pos[i] = p;
  }
  require(std::find(part.begin(), part.end(), -1) == part.end(), ErrorCode::InvalidInput,
          "split does not cover the basis");
  for (auto i : n_indices)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k)
        if (!is_zero(lie_binary(i, j, k)) && part[k] != part[j])
          fail(ErrorCode::NotReductive, "bracket leaves its block at " + tuple_text({i, j}));

  const std::size_t m = m_indices.size();
  Tensor bin({m, m, m});
  Tensor tern({m, m, m, m});
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      const std::size_t x = m_indices[a], y = m_indices[b];
      for (std::size_t k = 0; k < d; ++k) {
        const Scalar& c = lie_binary(x, y, k);
        if (is_zero(c)) continue;
        if (part[k] == 1) {
          bin(a, b, pos[k]) += c;
        } else {
          for (std::size_t e = 0; e < m; ++e)
            for (std::size_t l = 0; l < d; ++l) {
              const Scalar& c2 = lie_binary(k, m_indices[e], l);
              if (!is_zero(c2)) tern(a, b, e, pos[l]) += c * c2;
            }
        }
      }
    }
  return LyAlgebra(m, std::move(bin), std::move(tern));
}

LyAlgebra change_basis(const LyAlgebra& a, const Matrix& p) {
  require(p.rows() == a.dim() && p.cols() == a.dim(), ErrorCode::DimMismatch, "change of basis shape");
  const std::size_t n = a.dim();
  Matrix pinv = p.inverse();
  std::vector<Vec> cols(n);
  for (std::size_t i = 0; i < n; ++i) cols[i] = p.column(i);
  Tensor bin({n, n, n});
  Tensor tern({n, n, n, n});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec v = pinv.apply(a.bracket2(cols[i], cols[j]));
      for (std::size_t k = 0; k < n; ++k) bin(i, j, k) = v[k];
      for (std::size_t k = 0; k < n; ++k) {
        Vec w = pinv.apply(a.bracket3(cols[i], cols[j], cols[k]));
        for (std::size_t l = 0; l < n; ++l) tern(i, j, k, l) = w[l];
      }
    }
  return LyAlgebra(n, std::move(bin), std::move(tern));
}

namespace examples {

LyAlgebra two_dim() {
  Tensor bin({2, 2, 2});
  bin(0, 1, 0) = 1;
  bin(1, 0, 0) = -1;
  Tensor tern({2, 2, 2, 2});
  tern(0, 1, 1, 0) = 1;
  tern(1, 0, 1, 0) = -1;
  return LyAlgebra(2, std::move(bin), std::move(tern), {"e1", "e2"});
}

Tensor sl2_lie_binary() {
  // basis order h, e, f
  Tensor b({3, 3, 3});
  b(0, 1, 1) = 2;
  b(1, 0, 1) = -2;
  b(0, 2, 2) = -2;
  b(2, 0, 2) = 2;
  b(1, 2, 0) = 1;
  b(2, 1, 0) = -1;
  return b;
}

LyAlgebra sl2() { return from_lie_algebra(sl2_lie_binary()); }

Tensor leibniz_sample() {
  Tensor s({3, 3, 3});
  s(0, 2, 0) = -1;
  s(2, 0, 0) = 1;
  s(2, 1, 1) = -1;
  return s;
}

}  // namespace examples

}  // namespace rly
