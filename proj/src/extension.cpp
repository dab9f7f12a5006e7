#include "rly/extension.hpp"

#include "rly/error.hpp"

namespace rly {

namespace {

Matrix block_inject(std::size_t n, std::size_t m) {
  Matrix i(n + m, m);
  i.set_block(n, 0, Matrix::identity(m));
  return i;
}

Matrix block_project(std::size_t n, std::size_t m) {
  Matrix p(n, n + m);
  p.set_block(0, 0, Matrix::identity(n));
  return p;
}

struct Frame {
  std::size_t n, m;
  Matrix basis;  // [s | inject]
  Matrix inv;
  std::vector<Vec> s_img;  // s(e_x)
  std::vector<Vec> i_img;  // i(u_a)

  Frame(const AbelianExtension& e, const Section& s) : n(e.base_dim()), m(e.module_dim()) {
    const std::size_t N = e.total.dim();
    require(e.inject.rows() == N && e.project.cols() == N && n + m == N, ErrorCode::IncompatibleData,
            "extension maps do not match the total dimension");
    require(s.map.rows() == N && s.map.cols() == n, ErrorCode::NotSection, "section shape");
    require(e.project * s.map == Matrix::identity(n), ErrorCode::NotSection, "project after section is not the identity");
    basis = Matrix::hstack(s.map, e.inject);
    try {
      inv = basis.inverse();
    } catch (const Error&) {
      fail(ErrorCode::IncompatibleData, "section and injection do not span the total space");
    }
    for (std::size_t x = 0; x < n; ++x) s_img.push_back(s.map.column(x));
    for (std::size_t u = 0; u < m; ++u) i_img.push_back(e.inject.column(u));
  }

  // Splits v = s(l) + i(u) into (l, u).
  std::pair<Vec, Vec> split(const Vec& v) const {
    Vec c = inv.apply(v);
    return {Vec(c.begin(), c.begin() + n), Vec(c.begin() + n, c.end())};
  }
  Vec v_part(const Vec& v, bool require_pure) const {
    auto [l, u] = split(v);
    if (require_pure)
      require(is_zero(l), ErrorCode::IncompatibleData, "bracket with the kernel leaves the kernel");
    return u;
  }
};

}  // namespace

ExtensionCocycle ExtensionCocycle::zero(std::size_t n, std::size_t m) {
  return {Tensor({n, n, m}), Tensor({n, n, n, m}), Matrix(m, n)};
}

RlyCochain ExtensionCocycle::to_cochain() const {
  return RlyCochain{Cochain::from_bilinear(nu, psi), Cochain::from_map(chi)};
}

ExtensionCocycle ExtensionCocycle::from_cochain(const RlyCochain& c) {
  require(c.degree() == 2 && c.tail.has_value(), ErrorCode::ShapeMismatch, "extension cocycles have degree 2");
  return {c.top.full_f(), c.top.full_g(), c.tail->as_map()};
}

bool AbelianExtension::is_block_form() const {
  const std::size_t n = base_dim(), m = module_dim();
  return n + m == total.dim() && inject == block_inject(n, m) && project == block_project(n, m);
}

AxiomReport verify_extension(const LyAlgebra& a, const ReynoldsOperator& r, const AbelianExtension& e) {
  const std::size_t N = e.total.dim(), n = a.dim();
  require(e.project.rows() == n && e.project.cols() == N && e.inject.rows() == N, ErrorCode::DimMismatch,
          "extension maps do not match the algebras");
  const std::size_t m = e.inject.cols();
  AxiomReport rep = verify_ly_axioms(e.total);
  rep.append(verify_reynolds(e.total, e.op));

  auto& exact = rep.add("sequence_exact");
  exact.record(std::vector<std::size_t>{}, e.project * e.inject);
  const bool ranks_ok = rank(e.inject) == m && rank(e.project) == n && n + m == N;
  exact.record(std::vector<std::size_t>{}, Vec{Scalar(ranks_ok ? 0 : 1)});

  auto& ideal = rep.add("kernel_abelian");
  for (std::size_t u = 0; u < m; ++u)
    for (std::size_t v = 0; v < m; ++v) {
      Vec iu = e.inject.column(u), iv = e.inject.column(v);
      ideal.record(std::vector{u, v}, e.total.bracket2(iu, iv));
      for (std::size_t z = 0; z < N; ++z) {
        Vec ez = unit_vec(N, z);
        ideal.record(std::vector{u, v, z}, e.total.bracket3(ez, iu, iv));
        ideal.record(std::vector{u, v, z}, e.total.bracket3(iu, iv, ez));
      }
    }

  auto& sq = rep.add("operator_squares");
  sq.record(std::vector<std::size_t>{}, e.project * e.op.matrix - r.matrix * e.project);
  // T^ i = i T_V for some T_V: the image of i must be T^-invariant.
  Matrix ti = e.op.matrix * e.inject;
  for (std::size_t u = 0; u < m; ++u) {
    Vec col = ti.column(u);
    sq.record(std::vector{u}, Vec{Scalar(in_column_space(e.inject, col) ? 0 : 1)});
  }
  auto& w = rep.add("operator_weight");
  w.record(std::vector<std::size_t>{}, Vec{e.op.weight - r.weight});
  return rep;
}

AbelianExtension assemble_extension(const LyAlgebra& a, const ReynoldsOperator& r, const Representation& rep,
                                    const ExtensionCocycle& c) {
  auto [total, op] = twisted_sum(a, r, rep, c.nu, c.psi, c.chi);
  const std::size_t n = a.dim(), m = rep.module_dim();
  return {std::move(total), std::move(op), block_inject(n, m), block_project(n, m)};
}

AbelianExtension build_extension(const LyAlgebra& a, const ReynoldsOperator& r, const Representation& rep,
                                 const ExtensionCocycle& c) {
  CohomologyContext ctx(a, r, rep);
  const Vec v = c.to_cochain().coords();
  if (!ctx.is_cocycle(ComplexKind::RLY, 2, v))
    fail(ErrorCode::NotCocycle, "extension data is not a 2-cocycle of the mapping-cone complex");
  if (!is_zero(ctx.admissibility().apply(v)))
    fail(ErrorCode::NotAdmissible, "extension data violates the linearized cyclic axioms");
  AbelianExtension e = assemble_extension(a, r, rep, c);
  auto check = verify_extension(a, r, e);
  if (!check.passed())
    fail(ErrorCode::InternalInconsistency, "extension from an admissible cocycle fails " + check.first_failure()->name);
  return e;
}

Section canonical_section(const AbelianExtension& e) {
  require(e.is_block_form(), ErrorCode::IncompatibleData, "canonical section needs block form");
  return {e.project.transpose()};
}

Section shifted_section(const AbelianExtension& e, const Matrix& iota) {
  require(e.is_block_form(), ErrorCode::IncompatibleData, "shifted section needs block form");
  require(iota.rows() == e.module_dim() && iota.cols() == e.base_dim(), ErrorCode::DimMismatch, "shift shape");
  Matrix s = e.project.transpose();
  s.set_block(e.base_dim(), 0, iota);
  return {s};
}

AbelianExtension normalize(const AbelianExtension& e, const Section& s) {
  Frame f(e, s);
  const std::size_t n = f.n, m = f.m;
  return {change_basis(e.total, f.basis), {f.inv * e.op.matrix * f.basis, e.op.weight}, block_inject(n, m),
          block_project(n, m)};
}

Representation extract_rep(const AbelianExtension& e, const Section& s) {
  Frame f(e, s);
  const std::size_t n = f.n, m = f.m;
  std::vector<Matrix> rho(n, Matrix(m, m));
  std::vector<Matrix> theta(n * n, Matrix(m, m));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t u = 0; u < m; ++u) rho[x].set_column(u, f.v_part(e.total.bracket2(f.s_img[x], f.i_img[u]), true));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t u = 0; u < m; ++u)
        theta[x * n + y].set_column(u, f.v_part(e.total.bracket3(f.i_img[u], f.s_img[x], f.s_img[y]), true));
  Matrix tv(m, m);
  for (std::size_t u = 0; u < m; ++u) tv.set_column(u, f.v_part(e.op.apply(f.i_img[u]), true));
  return Representation(n, m, std::move(rho), std::move(theta), std::move(tv));
}

ExtensionCocycle extract_cocycle(const AbelianExtension& e, const Section& s) {
  Frame f(e, s);
  const std::size_t n = f.n, m = f.m;
  ExtensionCocycle c = ExtensionCocycle::zero(n, m);
  // s applied to an L-vector.
  auto lift = [&](const Vec& l) { return s.map.apply(l); };
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      Vec b = e.total.bracket2(f.s_img[x], f.s_img[y]);
      Vec base = e.project.apply(b);
      Vec nu = f.v_part(b - lift(base), true);
      for (std::size_t a = 0; a < m; ++a) c.nu(x, y, a) = nu[a];
      for (std::size_t z = 0; z < n; ++z) {
        Vec t = e.total.bracket3(f.s_img[x], f.s_img[y], f.s_img[z]);
        Vec psi = f.v_part(t - lift(e.project.apply(t)), true);
        for (std::size_t a = 0; a < m; ++a) c.psi(x, y, z, a) = psi[a];
      }
    }
  for (std::size_t x = 0; x < n; ++x) {
    Vec ts = e.op.apply(f.s_img[x]);
    Vec chi = f.v_part(ts - lift(e.project.apply(ts)), true);
    c.chi.set_column(x, chi);
  }
  return c;
}

std::optional<ExtensionIsomorphism> extensions_equivalent(const LyAlgebra& a, const ReynoldsOperator& r,
                                                          const Representation& rep, const AbelianExtension& e1,
                                                          const AbelianExtension& e2) {
  const std::size_t n = a.dim(), m = rep.module_dim();
  for (const auto* e : {&e1, &e2}) {
    require(e->base_dim() == n && e->module_dim() == m && e->is_block_form(), ErrorCode::IncompatibleData,
            "extensions must be in block form over the given data");
    require(extract_rep(*e, canonical_section(*e)) == rep, ErrorCode::IncompatibleData,
            "extension induces a different representation");
  }
  const Vec c1 = extract_cocycle(e1, canonical_section(e1)).to_cochain().coords();
  const Vec c2 = extract_cocycle(e2, canonical_section(e2)).to_cochain().coords();
  CohomologyContext ctx(a, r, rep);
  auto pre = ctx.preimage(ComplexKind::RLY, 2, c1 - c2);
  if (!pre) return std::nullopt;
  Matrix iota = Cochain({n, m, 1}, *pre).as_map();
  Matrix map = Matrix::identity(n + m);
  map.set_block(n, 0, iota);

  AxiomReport check = verify_morphism(e1.total, e2.total, map);
  auto& ops = check.add("commutes_with_operators");
  ops.record(std::vector<std::size_t>{}, map * e1.op.matrix - e2.op.matrix * map);
  auto& diag = check.add("identity_on_kernel_and_base");
  diag.record(std::vector<std::size_t>{}, map * e1.inject - e2.inject);
  diag.record(std::vector<std::size_t>{}, e2.project * map - e1.project);
  if (!check.passed())
    fail(ErrorCode::InternalInconsistency, "constructed equivalence fails " + check.first_failure()->name);
  return ExtensionIsomorphism{std::move(iota), std::move(map)};
}

}  // namespace rly
