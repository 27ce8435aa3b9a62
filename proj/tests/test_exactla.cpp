#include <doctest.h>

#include "syntaft/error.hpp"
#include "syntaft/exactla.hpp"

using namespace syntaft;

TEST_SUITE_BEGIN("exactla");

TEST_CASE("rref examples") {
  CHECK(rref(Matrix{{0, 0}, {0, 0}}) == Matrix{{0, 0}, {0, 0}});
  CHECK(rref(Matrix{{2, 4}, {1, 2}}) == Matrix{{1, 2}, {0, 0}});
  CHECK(rref(Matrix{{1, 1}, {1, 2}}) == Matrix::identity(2));
}

TEST_CASE("kernel examples") {
  CHECK(kernel(Matrix::identity(3)).dim() == 0);
  CHECK(kernel(Matrix(2, 3)).dim() == 3);
  const Subspace k = kernel(Matrix{{1, 1}});
  CHECK(k.dim() == 1);
  CHECK(k.contains(Vector{1, -1}));
}

TEST_CASE("intersections and sums") {
  const Subspace x = Subspace::span({{1, 0}}, 2);
  const Subspace y = Subspace::span({{0, 1}}, 2);
  CHECK(intersect(x, y).dim() == 0);
  CHECK(intersect(Subspace::full(2), Subspace::span({{1, 1}}, 2)) == Subspace::span({{1, 1}}, 2));
  CHECK(sum(x, y) == Subspace::full(2));
  CHECK_THROWS_AS(intersect(x, Subspace::full(3)), Error);
}

TEST_CASE("rank, determinant, inverse") {
  const Matrix m{{2, 1, 0}, {1, 3, 1}, {0, 1, 4}};
  CHECK(rank(m) == 3);
  // Cofactor expansion by hand: 2(12-1) - 1(4-0) = 18.
  CHECK(determinant(m) == 18);
  const auto inv = inverse(m);
  REQUIRE(inv.has_value());
  CHECK(m * *inv == Matrix::identity(3));
  CHECK_FALSE(inverse(Matrix{{1, 2}, {2, 4}}).has_value());
  CHECK(determinant(Matrix{{1, 2}, {2, 4}}) == 0);
}

TEST_CASE("subspace coordinates and annihilator") {
  const Subspace s = Subspace::span({{1, 2, 3}, {0, 1, 1}}, 3);
  const Vector v{2, 5, 7};  // 2*(1,2,3) + 1*(0,1,1)
  const auto c = s.coordinates(v);
  REQUIRE(c.has_value());
  Vector back = zero_vector(3);
  for (std::size_t i = 0; i < s.dim(); ++i) axpy((*c)[i], s.basis_vector(i), back);
  CHECK(back == v);
  CHECK_FALSE(s.coordinates(Vector{0, 0, 1}).has_value());
  const Subspace ann = s.annihilator();
  CHECK(ann.dim() == 1);
  CHECK(dot(ann.basis_vector(0), Vector{1, 2, 3}) == 0);
  CHECK(dot(ann.basis_vector(0), Vector{0, 1, 1}) == 0);
}

TEST_CASE("span builder keeps insertion order") {
  SpanBuilder b(3);
  CHECK(b.try_add({1, 1, 0}));
  CHECK(b.try_add({0, 1, 1}));
  CHECK_FALSE(b.try_add({1, 2, 1}));
  const auto c = b.coordinates({2, 3, 1});
  REQUIRE(c.has_value());
  CHECK(*c == Vector{2, 1});
  CHECK_FALSE(b.coordinates({0, 0, 1}).has_value());
}

TEST_CASE("rational parsing") {
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK(to_string(parse_rational("-6/4")) == "-3/2");
  CHECK(to_string(parse_rational("5")) == "5");
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("1.5"), ParseError);
  CHECK_THROWS_AS(parse_rational(""), ParseError);
}
TEST_SUITE_END();
