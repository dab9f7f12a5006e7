#include "rly/deformation.hpp"
#include "rly/error.hpp"
#include "support/generators.hpp"

#include <doctest.h>

using namespace rly;

namespace {
const ReynoldsOperator kR{Matrix{{2, 3}, {0, 5}}, Scalar(-1, 5)};
}

TEST_CASE("constant deformation passes every order") {
  LyAlgebra a = examples::two_dim();
  auto def = TruncatedDeformation::constant(a, kR, 2);
  CHECK(def.order() == 2);
  OrderReport r = verify_deformation(a, kR, def);
  CHECK(r.passed());
  CHECK(r.orders.size() == 3);
  CHECK(r.orders[0].find("base_terms"));
  CHECK(infinitesimal(def) == RlyCochain::zero(2, 2, 2));
}

TEST_CASE("scaling the binary bracket") {
  LyAlgebra a = examples::two_dim();
  auto def = TruncatedDeformation::constant(a, kR, 2);
  def.F[1] = a.binary();
  CHECK(verify_deformation(a, kR, def).passed());
  CHECK_THROWS_WITH_AS(infinitesimal(TruncatedDeformation::constant(a, kR, 0)), doctest::Contains("OrderTooLow"),
                       Error);
}

TEST_CASE("a non-cocycle first-order term fails at order one") {
  LyAlgebra a = examples::two_dim();
  auto def = TruncatedDeformation::constant(a, kR, 1);
  def.T[1] = Matrix{{0, 0}, {1, 0}};
  OrderReport r = verify_deformation(a, kR, def);
  CHECK(r.passed_through(0));
  CHECK_FALSE(r.passed_through(1));
  auto f = r.first_failure();
  REQUIRE(f);
  CHECK(f->order == 1);
  CHECK_FALSE(f->check->witness.empty());
}

TEST_CASE("first-order deformations from admissible cocycles verify") {
  LyAlgebra a = examples::two_dim();
  CohomologyContext ctx(a, kR, adjoint_rep(a, kR));
  for (const Vec& v : ctx.admissible_cocycles().vectors) {
    RlyCochain c = RlyCochain::from_coords(2, 2, 2, v);
    auto def = TruncatedDeformation::first_order(a, kR, c);
    CHECK(verify_deformation(a, kR, def).passed());
    CHECK(infinitesimal(def) == c);
  }
}

TEST_CASE("formal inverse") {
  testgen::Rng rng(2);
  Matrix p1 = testgen::random_matrix(rng, 3, 3);
  auto iso = FormalIsomorphism::linear(p1, 3);
  auto inv = iso.inverse();
  REQUIRE(inv.order() == 3);
  CHECK(inv.phi[1] == -p1);
  CHECK(inv.phi[2] == p1 * p1);
  CHECK(inv.phi[3] == -(p1 * p1 * p1));
}

TEST_CASE("transport along Id + phi1 t shifts the infinitesimal by d(phi1)") {
  testgen::Rng rng(4);
  LyAlgebra a = examples::two_dim();
  CohomologyContext ctx(a, kR, adjoint_rep(a, kR));
  for (int i = 0; i < 5; ++i) {
    Matrix p1 = testgen::random_matrix(rng, 2, 2);
    auto def = apply_equivalence(TruncatedDeformation::constant(a, kR, 2), FormalIsomorphism::linear(p1, 2));
    CHECK(verify_deformation(a, kR, def).passed());
    CHECK(infinitesimal(def).coords() == ctx.differential(ComplexKind::RLY, 1).apply(Cochain::from_map(p1).coords()));
    auto [iso, flat] = trivialize_first_order(a, kR, def);
    CHECK(flat.F[1].is_zero());
    CHECK(flat.G[1].is_zero());
    CHECK(flat.T[1].is_zero());
    CHECK(verify_deformation(a, kR, flat).passed());
  }
  CHECK_THROWS_AS(apply_equivalence(TruncatedDeformation::constant(a, kR, 2), FormalIsomorphism::identity(2, 1)),
                  Error);
}

TEST_CASE("a nontrivial class cannot be trivialized") {
  LyAlgebra a = examples::two_dim();
  auto def = TruncatedDeformation::constant(a, kR, 1);
  def.F[1] = a.binary();
  CHECK_THROWS_WITH_AS(trivialize_first_order(a, kR, def), doctest::Contains("NotCoboundary"), Error);
}
