#include "rly/error.hpp"
#include "rly/linalg.hpp"

#include <doctest.h>

using namespace rly;

TEST_CASE("scalars parse and print in lowest terms") {
  CHECK(parse_scalar("6/4") == Scalar(3, 2));
  CHECK(parse_scalar("-7") == Scalar(-7));
  CHECK(to_string(parse_scalar("-10/5")) == "-2");
  CHECK(to_string(Scalar(1, 3) + Scalar(1, 6)) == "1/2");
  CHECK_THROWS_AS(parse_scalar("1/0"), Error);
  CHECK_THROWS_AS(parse_scalar("abc"), Error);
  CHECK_THROWS_AS(parse_scalar(""), Error);
}

TEST_CASE("rank, kernel and image of a rank-deficient matrix") {
  Matrix m{{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
  CHECK(rank(m) == 2);
  SubspaceBasis k = kernel_basis(m);
  REQUIRE(k.dim() == 1);
  CHECK(is_zero(m.apply(k.vectors[0])));
  CHECK(k.vectors[0] == Vec{-1, -1, 1});
  SubspaceBasis im = image_basis(m);
  CHECK(im.dim() == 2);
  CHECK(im.vectors[0] == m.column(0));
  CHECK(im.vectors[1] == m.column(1));
}

TEST_CASE("solve and column-space membership") {
  Matrix m{{1, 1}, {0, 1}, {1, 2}};
  Vec b{3, 1, 4};
  auto x = solve(m, b);
  REQUIRE(x);
  CHECK(m.apply(*x) == b);
  CHECK(in_column_space(m, b));
  CHECK_FALSE(solve(m, Vec{1, 0, 0}));
}

TEST_CASE("quotient dimension and composition check") {
  Matrix d1{{1, 0}, {0, 0}};
  Matrix d2{{0, 1}};
  CHECK(quotient_dim(d2, d1) == 0);
  Matrix bad{{1, 0}};
  CHECK_THROWS_WITH_AS(quotient_dim(bad, d1), doctest::Contains("CompositionNotZero"), Error);
}

TEST_CASE("inverse and singular matrices") {
  Matrix t{{2, 3}, {0, 5}};
  Matrix inv = t.inverse();
  CHECK(t * inv == Matrix::identity(2));
  CHECK(inv(0, 1) == Scalar(-3, 10));
  CHECK_THROWS_AS((Matrix{{1, 2}, {2, 4}}).inverse(), Error);
}

TEST_CASE("tensor contraction") {
  Tensor t({2, 2, 2});
  t(0, 1, 0) = 1;
  t(1, 0, 0) = -1;
  Vec out = contract(t, Vec{1, 2}, Vec{3, 4});
  CHECK(out == Vec{1 * 4 - 2 * 3, 0});
}
