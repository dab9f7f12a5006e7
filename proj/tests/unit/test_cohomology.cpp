#include "rly/cohomology.hpp"
#include "rly/error.hpp"
#include "support/generators.hpp"

#include <doctest.h>

using namespace rly;

namespace {

const ReynoldsOperator kR{Matrix{{2, 3}, {0, 5}}, Scalar(-1, 5)};

std::vector<std::size_t> column(const ComplexReport& r, std::size_t DegreeRow::*field) {
  std::vector<std::size_t> out;
  for (const auto& row : r.rows) out.push_back(row.*field);
  return out;
}

using V = std::vector<std::size_t>;

}  // namespace

TEST_CASE("first coboundary of the identity map") {
  // delta(h)(x,y) = rho(x)h(y) - rho(y)h(x) - h([x,y]) = [x,y] for h = Id.
  LyAlgebra a = examples::two_dim();
  Cochain c = delta(a, adjoint_rep(a), Cochain::from_map(Matrix::identity(2)));
  CHECK(c.degree() == 2);
  CHECK(c.full_f()(0, 1, 0) == 1);
  CHECK(c.full_f()(0, 1, 1) == 0);
}

TEST_CASE("matrix and direct evaluation agree") {
  testgen::Rng rng(5);
  for (int i = 0; i < 6; ++i) {
    auto t = testgen::random_triple(rng);
    CAPTURE(t.label);
    for (std::size_t p = 1; p <= 3; ++p) {
      Cochain c(CochainShape{t.a.dim(), t.rep.module_dim(), p},
                testgen::random_vec(rng, CochainShape{t.a.dim(), t.rep.module_dim(), p}.dim()));
      CHECK(delta_matrix(t.a, t.rep, p).apply(c.coords()) == delta(t.a, t.rep, c).coords());
      CHECK(phi_matrix(t.a, t.r, t.rep, p).apply(c.coords()) == phi(t.a, t.r, t.rep, c).coords());
    }
  }
}

TEST_CASE("example: LY and RO complexes") {
  LyAlgebra a = examples::two_dim();
  Representation ad = adjoint_rep(a, kR);
  ComplexReport ly = cohomology_dims(a, kR, ad, ComplexKind::LY, 3);
  CHECK(column(ly, &DegreeRow::dim_cochain) == V{4, 6, 6});
  CHECK(column(ly, &DegreeRow::rank_outgoing) == V{2, 3, 2});
  CHECK(column(ly, &DegreeRow::betti) == V{2, 1, 1});
  CHECK(ly.top_dim == 6);
  CHECK(ly.squares_vanish);
  CHECK_FALSE(ly.chain_map);

  ComplexReport ro = cohomology_dims(a, kR, ad, ComplexKind::RO, 3);
  CHECK(column(ro, &DegreeRow::dim_cochain) == V{4, 6, 6});
  CHECK(ro.squares_vanish);
  CHECK(ro.chain_map == true);
}

TEST_CASE("example: mapping-cone complex") {
  LyAlgebra a = examples::two_dim();
  ComplexReport r = cohomology_dims(a, kR, adjoint_rep(a, kR), ComplexKind::RLY, 3);
  CHECK(column(r, &DegreeRow::dim_cochain) == V{4, 10, 12});
  CHECK(column(r, &DegreeRow::betti) == V{1, 2, 1});
  CHECK(r.top_dim == 12);
  CHECK(r.squares_vanish);
}

TEST_CASE("sl2 with the operator from ad h") {
  LyAlgebra s = examples::sl2();
  ReynoldsOperator r{Matrix{{-1, 0, 0}, {0, 1, 0}, {0, 0, Scalar(-1, 3)}}, 1};
  CohomologyContext ctx(s, r, adjoint_rep(s, r));
  ComplexReport ly = ctx.report(ComplexKind::LY, 2);
  CHECK(ly.rows[0].rank_outgoing == 6);
  CHECK(ly.rows[1].dim_kernel == 7);
  ComplexReport rly = ctx.report(ComplexKind::RLY, 3);
  CHECK(column(rly, &DegreeRow::dim_cochain) == V{9, 45, 144});
  CHECK(column(rly, &DegreeRow::betti) == V{1, 2, 1});
  CHECK(rly.chain_map == true);
}

TEST_CASE("abelian algebra with zero coefficients has vanishing differentials") {
  LyAlgebra a = LyAlgebra::abelian(2);
  ReynoldsOperator r{Matrix(2, 2), 3};
  Representation z = Representation::zero(2, 2, Matrix(2, 2));
  for (auto k : {ComplexKind::LY, ComplexKind::RO, ComplexKind::RLY}) {
    ComplexReport rep = cohomology_dims(a, r, z, k, 3);
    for (const auto& row : rep.rows) CHECK(row.betti == row.dim_cochain);
  }
}

TEST_CASE("mapping-cone dimensions add up") {
  for (std::size_t n = 1; n <= 3; ++n)
    for (std::size_t m = 1; m <= 3; ++m)
      for (std::size_t p = 2; p <= 4; ++p)
        CHECK(cochain_dim(ComplexKind::RLY, n, m, p) ==
              cochain_dim(ComplexKind::LY, n, m, p) + cochain_dim(ComplexKind::RO, n, m, p - 1));
}

TEST_CASE("cocycles, coboundaries and classes") {
  LyAlgebra a = examples::two_dim();
  CohomologyContext ctx(a, kR, adjoint_rep(a, kR));
  const Matrix& d1 = ctx.differential(ComplexKind::RLY, 1);
  Vec h{1, 2, 3, 4};
  Vec b = d1.apply(h);
  CHECK(ctx.is_cocycle(ComplexKind::RLY, 2, b));
  auto pre = ctx.preimage(ComplexKind::RLY, 2, b);
  REQUIRE(pre);
  CHECK(d1.apply(*pre) == b);
  auto reps = ctx.h2_representatives();
  REQUIRE(reps.size() == 2);
  CHECK(ctx.is_cocycle(ComplexKind::RLY, 2, reps[0]));
  CHECK_FALSE(ctx.is_coboundary(ComplexKind::RLY, 2, reps[0]));
  CHECK(ctx.cohomologous(ComplexKind::RLY, 2, reps[0], reps[0] + b));
  CHECK_FALSE(ctx.cohomologous(ComplexKind::RLY, 2, reps[0], reps[1]));
  CHECK_FALSE(ctx.is_cocycle(ComplexKind::RLY, 1, h));
}

TEST_CASE("admissibility cuts out cyclic g on three generators") {
  // Zero module over the abelian 3-dim algebra: every cochain is a cocycle,
  // and the only admissibility rows are g(x,y,z) + g(y,z,x) + g(z,x,y) = 0
  // for x,y,z distinct, one per output coordinate.
  LyAlgebra a = LyAlgebra::abelian(3);
  CohomologyContext ctx(a, ReynoldsOperator{Matrix(3, 3), 0}, Representation::zero(3, 3, Matrix::identity(3)));
  CHECK(ctx.report(ComplexKind::RLY, 2).rows[1].dim_kernel == 45);
  CHECK(ctx.admissible_cocycles().dim() == 42);
  // In dimension 2 the cyclic rows vanish identically.
  LyAlgebra b = LyAlgebra::abelian(2);
  CohomologyContext ctx2(b, ReynoldsOperator{Matrix(2, 2), 0}, Representation::zero(2, 2, Matrix(2, 2)));
  CHECK(ctx2.admissible_cocycles().dim() == RlyCochain::dim(2, 2, 2));
}

TEST_CASE("degree and operator errors") {
  LyAlgebra a = examples::two_dim();
  CohomologyContext ctx(a, std::nullopt, adjoint_rep(a));
  CHECK_THROWS_WITH_AS(ctx.differential(ComplexKind::LY, 0), doctest::Contains("DegreeOutOfRange"), Error);
  CHECK_THROWS_WITH_AS(ctx.differential(ComplexKind::LY, kMaxDegree + 1), doctest::Contains("DegreeOutOfRange"),
                       Error);
  CHECK_THROWS_AS(ctx.differential(ComplexKind::RLY, 1), Error);
  CHECK(parse_complex_kind("RLY") == ComplexKind::RLY);
  CHECK_THROWS_AS(parse_complex_kind("xyz"), Error);
}
