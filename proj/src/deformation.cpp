#include "rly/deformation.hpp"

#include "rly/error.hpp"

namespace rly {

namespace {

Matrix series_coeff(const std::vector<Matrix>& s, std::size_t i, std::size_t n) {
  return i < s.size() ? s[i] : Matrix(n, n);
}

void check_shapes(const LyAlgebra& a, const TruncatedDeformation& def) {
  const std::size_t n = a.dim();
  require(!def.F.empty() && def.F.size() == def.G.size() && def.F.size() == def.T.size(), ErrorCode::ShapeMismatch,
          "deformation term lists must be nonempty and of equal length");
  for (std::size_t i = 0; i < def.F.size(); ++i) {
    require(def.F[i].shape() == std::vector<std::size_t>{n, n, n}, ErrorCode::ShapeMismatch, "binary term shape");
    require(def.G[i].shape() == std::vector<std::size_t>{n, n, n, n}, ErrorCode::ShapeMismatch,
            "ternary term shape");
    require(def.T[i].rows() == n && def.T[i].cols() == n, ErrorCode::ShapeMismatch, "operator term shape");
  }
}

}  // namespace

TruncatedDeformation TruncatedDeformation::constant(const LyAlgebra& a, const ReynoldsOperator& r, std::size_t order) {
  const std::size_t n = a.dim();
  TruncatedDeformation d;
  d.F.assign(order + 1, Tensor({n, n, n}));
  d.G.assign(order + 1, Tensor({n, n, n, n}));
  d.T.assign(order + 1, Matrix(n, n));
  d.F[0] = a.binary();
  d.G[0] = a.ternary();
  d.T[0] = r.matrix;
  return d;
}

TruncatedDeformation TruncatedDeformation::first_order(const LyAlgebra& a, const ReynoldsOperator& r,
                                                       const RlyCochain& c) {
  const std::size_t n = a.dim();
  require(c.degree() == 2 && c.tail && c.top.shape() == CochainShape{n, n, 2}, ErrorCode::ShapeMismatch,
          "infinitesimal must be a degree-2 cochain with adjoint coefficients");
  TruncatedDeformation d = constant(a, r, 1);
  d.F[1] = c.top.full_f();
  d.G[1] = c.top.full_g();
  d.T[1] = c.tail->as_map();
  return d;
}

FormalIsomorphism FormalIsomorphism::identity(std::size_t n, std::size_t order) {
  FormalIsomorphism f;
  f.phi.assign(order + 1, Matrix(n, n));
  f.phi[0] = Matrix::identity(n);
  return f;
}

FormalIsomorphism FormalIsomorphism::linear(const Matrix& phi1, std::size_t order) {
  require(phi1.is_square(), ErrorCode::DimMismatch, "phi_1 must be square");
  FormalIsomorphism f = identity(phi1.rows(), order);
  if (order >= 1) f.phi[1] = phi1;
  return f;
}

FormalIsomorphism FormalIsomorphism::inverse() const {
  require(!phi.empty() && phi[0] == Matrix::identity(phi[0].rows()), ErrorCode::InvalidInput,
          "formal isomorphism must start with the identity");
  const std::size_t n = phi[0].rows();
  FormalIsomorphism inv = identity(n, order());
  for (std::size_t k = 1; k <= order(); ++k) {
    Matrix acc(n, n);
    for (std::size_t i = 1; i <= k; ++i) acc = acc + phi[i] * inv.phi[k - i];
    inv.phi[k] = -acc;
  }
  return inv;
}

bool OrderReport::passed() const {
  for (const auto& o : orders)
    if (!o.passed()) return false;
  return true;
}

bool OrderReport::passed_through(std::size_t n) const {
  for (std::size_t i = 0; i <= n && i < orders.size(); ++i)
    if (!orders[i].passed()) return false;
  return n < orders.size();
}

std::optional<OrderReport::Failure> OrderReport::first_failure() const {
  for (std::size_t i = 0; i < orders.size(); ++i)
    if (const CheckResult* c = orders[i].first_failure()) return Failure{i, c};
  return std::nullopt;
}

OrderReport verify_deformation(const LyAlgebra& a, const ReynoldsOperator& r, const TruncatedDeformation& def) {
  check_shapes(a, def);
  const std::size_t n = a.dim();
  const std::size_t N = def.order();
  const Scalar& w = r.weight;
  auto e = [n](std::size_t i) { return unit_vec(n, i); };
  auto F = [&](std::size_t i, const Vec& x, const Vec& y) { return contract(def.F[i], x, y); };
  auto G = [&](std::size_t i, const Vec& x, const Vec& y, const Vec& z) { return contract(def.G[i], x, y, z); };
  auto T = [&](std::size_t i, const Vec& x) { return def.T[i].apply(x); };
  // timg[j][x] = T_j e_x
  std::vector<std::vector<Vec>> timg(N + 1, std::vector<Vec>(n));
  for (std::size_t j = 0; j <= N; ++j)
    for (std::size_t x = 0; x < n; ++x) timg[j][x] = def.T[j].column(x);

  OrderReport out;
  for (std::size_t ord = 0; ord <= N; ++ord) {
    AxiomReport rep;
    if (ord == 0) {
      auto& base = rep.add("base_terms");
      base.record(std::vector<std::size_t>{}, (def.F[0] - a.binary()).data());
      base.record(std::vector<std::size_t>{}, (def.G[0] - a.ternary()).data());
      base.record(std::vector<std::size_t>{}, def.T[0] - r.matrix);
    }
    auto& c1 = rep.add(axiom::kBinaryAntisymmetry);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) c1.record(std::vector{x, y}, F(ord, e(x), e(y)) + F(ord, e(y), e(x)));
    auto& c2 = rep.add(axiom::kTernaryAntisymmetry);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t z = 0; z < n; ++z)
          c2.record(std::vector{x, y, z}, G(ord, e(x), e(y), e(z)) + G(ord, e(y), e(x), e(z)));

    auto& c3 = rep.add(axiom::kCyclicJacobi);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t z = 0; z < n; ++z) {
          Vec res = G(ord, e(x), e(y), e(z)) + G(ord, e(y), e(z), e(x)) + G(ord, e(z), e(x), e(y));
          for (std::size_t i = 0; i <= ord; ++i) {
            const std::size_t j = ord - i;
            res = res + F(i, F(j, e(x), e(y)), e(z)) + F(i, F(j, e(y), e(z)), e(x)) + F(i, F(j, e(z), e(x)), e(y));
          }
          c3.record(std::vector{x, y, z}, res);
        }

    auto& c4 = rep.add(axiom::kCyclicTernary);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t z = 0; z < n; ++z)
          for (std::size_t q = 0; q < n; ++q) {
            Vec res = zero_vec(n);
            for (std::size_t i = 0; i <= ord; ++i) {
              const std::size_t j = ord - i;
              res = res + G(i, F(j, e(x), e(y)), e(z), e(q)) + G(i, F(j, e(y), e(z)), e(x), e(q)) +
                    G(i, F(j, e(z), e(x)), e(y), e(q));
            }
            c4.record(std::vector{x, y, z, q}, res);
          }

    auto& c5 = rep.add(axiom::kTernaryDerivesBinary);
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = 0; q < n; ++q)
        for (std::size_t x = 0; x < n; ++x)
          for (std::size_t y = 0; y < n; ++y) {
            Vec res = zero_vec(n);
            for (std::size_t i = 0; i <= ord; ++i) {
              const std::size_t j = ord - i;
              res = res + G(i, e(p), e(q), F(j, e(x), e(y))) - F(i, G(j, e(p), e(q), e(x)), e(y)) -
                    F(i, e(x), G(j, e(p), e(q), e(y)));
            }
            c5.record(std::vector{p, q, x, y}, res);
          }

    auto& c6 = rep.add(axiom::kTernaryDerivesTernary);
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = 0; q < n; ++q)
        for (std::size_t x = 0; x < n; ++x)
          for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z) {
              Vec res = zero_vec(n);
              for (std::size_t i = 0; i <= ord; ++i) {
                const std::size_t j = ord - i;
                res = res + G(i, e(p), e(q), G(j, e(x), e(y), e(z))) - G(i, G(j, e(p), e(q), e(x)), e(y), e(z)) -
                      G(i, e(x), G(j, e(p), e(q), e(y)), e(z)) - G(i, e(x), e(y), G(j, e(p), e(q), e(z)));
              }
              c6.record(std::vector{p, q, x, y, z}, res);
            }

    auto& c7 = rep.add(axiom::kReynoldsBinary);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        Vec res = zero_vec(n);
        for (std::size_t i = 0; i <= ord; ++i)
          for (std::size_t j = 0; i + j <= ord; ++j) {
            const std::size_t k = ord - i - j;
            res = res + F(i, timg[j][x], timg[k][y]);
            res = res - T(i, F(j, timg[k][x], e(y)) + F(j, e(x), timg[k][y]));
            for (std::size_t k2 = 0; i + j + k2 <= ord; ++k2) {
              const std::size_t l = ord - i - j - k2;
              res = res - w * T(i, F(j, timg[k2][x], timg[l][y]));
            }
          }
        c7.record(std::vector{x, y}, res);
      }

    auto& c8 = rep.add(axiom::kReynoldsTernary);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t z = 0; z < n; ++z) {
          Vec res = zero_vec(n);
          for (std::size_t i = 0; i <= ord; ++i)
            for (std::size_t j = 0; i + j <= ord; ++j)
              for (std::size_t k = 0; i + j + k <= ord; ++k) {
                const std::size_t l = ord - i - j - k;
                // sum_{i+j+k+l=n} G_i(T_j x, T_k y, T_l z)
                res = res + G(i, timg[j][x], timg[k][y], timg[l][z]);
                // sum_{i+j+k+l=n} T_i(G_j(x, T_k y, T_l z) + G_j(T_k x, y, T_l z) + G_j(T_k x, T_l y, z))
                res = res - T(i, G(j, e(x), timg[k][y], timg[l][z]) + G(j, timg[k][x], e(y), timg[l][z]) +
                                     G(j, timg[k][x], timg[l][y], e(z)));
                for (std::size_t l2 = 0; i + j + k + l2 <= ord; ++l2) {
                  const std::size_t m = ord - i - j - k - l2;
                  res = res - (2 * w) * T(i, G(j, timg[k][x], timg[l2][y], timg[m][z]));
                }
              }
          c8.record(std::vector{x, y, z}, res);
        }
    out.orders.push_back(std::move(rep));
  }
  return out;
}

RlyCochain infinitesimal(const TruncatedDeformation& def) {
  require(def.order() >= 1, ErrorCode::OrderTooLow, "infinitesimal needs a deformation of order at least 1");
  return RlyCochain{Cochain::from_bilinear(def.F[1], def.G[1]), Cochain::from_map(def.T[1])};
}

TruncatedDeformation apply_equivalence(const TruncatedDeformation& def, const FormalIsomorphism& iso) {
  require(def.order() == iso.order(), ErrorCode::OrderMismatch, "deformation and isomorphism orders differ");
  const std::size_t N = def.order();
  const std::size_t n = def.T.empty() ? 0 : def.T[0].rows();
  const FormalIsomorphism inv = iso.inverse();
  auto P = [&](std::size_t i) { return series_coeff(iso.phi, i, n); };
  auto Q = [&](std::size_t i) { return series_coeff(inv.phi, i, n); };

  // images[c][x] = phi_c e_x
  std::vector<std::vector<Vec>> img(N + 1, std::vector<Vec>(n));
  for (std::size_t c = 0; c <= N; ++c)
    for (std::size_t x = 0; x < n; ++x) img[c][x] = P(c).column(x);

  TruncatedDeformation out;
  out.F.assign(N + 1, Tensor({n, n, n}));
  out.G.assign(N + 1, Tensor({n, n, n, n}));
  out.T.assign(N + 1, Matrix(n, n));
  for (std::size_t ord = 0; ord <= N; ++ord) {
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        Vec acc = zero_vec(n);
        for (std::size_t a = 0; a <= ord; ++a)
          for (std::size_t b = 0; a + b <= ord; ++b)
            for (std::size_t c = 0; a + b + c <= ord; ++c) {
              const std::size_t d = ord - a - b - c;
              acc = acc + Q(a).apply(contract(def.F[b], img[c][x], img[d][y]));
            }
        for (std::size_t k = 0; k < n; ++k) out.F[ord](x, y, k) = acc[k];
        for (std::size_t z = 0; z < n; ++z) {
          Vec acc3 = zero_vec(n);
          for (std::size_t a = 0; a <= ord; ++a)
            for (std::size_t b = 0; a + b <= ord; ++b)
              for (std::size_t c = 0; a + b + c <= ord; ++c)
                for (std::size_t d = 0; a + b + c + d <= ord; ++d) {
                  const std::size_t f = ord - a - b - c - d;
                  acc3 = acc3 + Q(a).apply(contract(def.G[b], img[c][x], img[d][y], img[f][z]));
                }
          for (std::size_t k = 0; k < n; ++k) out.G[ord](x, y, z, k) = acc3[k];
        }
      }
    Matrix t(n, n);
    for (std::size_t a = 0; a <= ord; ++a)
      for (std::size_t b = 0; a + b <= ord; ++b) t = t + Q(a) * def.T[b] * P(ord - a - b);
    out.T[ord] = std::move(t);
  }
  return out;
}

std::pair<FormalIsomorphism, TruncatedDeformation> trivialize_first_order(const LyAlgebra& a,
                                                                          const ReynoldsOperator& r,
                                                                          const TruncatedDeformation& def) {
  check_shapes(a, def);
  const std::size_t n = a.dim();
  RlyCochain inf = infinitesimal(def);
  if (inf.top.is_zero() && inf.tail->is_zero()) return {FormalIsomorphism::identity(n, def.order()), def};
  CohomologyContext ctx(a, r, adjoint_rep(a, r));
  auto pre = ctx.preimage(ComplexKind::RLY, 2, inf.coords());
  if (!pre) fail(ErrorCode::NotCoboundary, "infinitesimal is not a coboundary; first-order trivialization is obstructed");
  Matrix phi1 = Cochain({n, n, 1}, *pre).as_map();
  FormalIsomorphism iso = FormalIsomorphism::linear(-phi1, def.order());
  TruncatedDeformation out = apply_equivalence(def, iso);
  RlyCochain check = infinitesimal(out);
  require(check.top.is_zero() && check.tail->is_zero(), ErrorCode::InternalInconsistency,
          "transported deformation keeps nonzero order-1 terms");
  return {std::move(iso), std::move(out)};
}

}  // namespace rly
