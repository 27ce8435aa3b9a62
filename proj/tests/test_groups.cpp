#include <doctest.h>

#include "corpus.hpp"
#include "syntaft/error.hpp"

using namespace syntaft;

TEST_SUITE_BEGIN("groups");
using namespace corpus;

namespace {
ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::ParseError;
}
}  // namespace

TEST_CASE("validate_group") {
  const FiniteGroup z4 = catalog("cyclic", 4);
  CHECK(validate_group(z4).ok);
  std::vector<std::size_t> t = z4.table();
  std::swap(t[1 * 4 + 1], t[1 * 4 + 2]);
  CHECK_FALSE(validate_group(FiniteGroup(z4.names(), t, z4.identity())).ok);
  // Latin square with identity that is not associative.
  const FiniteGroup loop({"e", "a", "b", "c", "d"},
                         {0, 1, 2, 3, 4, 1, 0, 3, 4, 2, 2, 4, 0, 1, 3, 3, 2, 4, 0, 1, 4, 3, 1, 2, 0}, 0);
  CHECK_FALSE(validate_group(loop).ok);
}

TEST_CASE("catalog") {
  CHECK(catalog("cyclic", 5).order() == 5);
  CHECK(catalog("klein", 0).order() == 4);
  CHECK(catalog("symmetric", 3).order() == 6);
  CHECK(catalog("symmetric", 4).order() == 24);
  for (const auto& g : {catalog("cyclic", 4), catalog("klein", 0), catalog("symmetric", 3)})
    CHECK(validate_group(g).ok);
  CHECK(is_abelian(catalog("klein", 0)));
  CHECK_FALSE(is_abelian(catalog("symmetric", 3)));
  CHECK(conjugacy_class_count(catalog("symmetric", 3)) == 3);
  CHECK(conjugacy_class_count(catalog("symmetric", 4)) == 5);
  CHECK(code_of([] { catalog("dihedral", 4); }) == ErrorCode::UnknownCatalogEntry);
  CHECK(code_of([] { catalog("cyclic", 0); }) == ErrorCode::ParameterTooLarge);
  CHECK(code_of([] { catalog("symmetric", 5); }) == ErrorCode::ParameterTooLarge);
}

TEST_CASE("group algebra and its functionals") {
  const FiniteGroup z3 = catalog("cyclic", 3);
  const auto [alg, delta] = group_algebra(z3, Normalization::Delta);
  CHECK(validate(alg).ok);
  CHECK(alg.dim() == 3);
  CHECK(delta(alg.unit()) == 1);
  const auto [alg2, dw] = group_algebra(z3, Normalization::DijkgraafWitten);
  CHECK(alg2 == alg);
  CHECK(dw(alg.unit()) == Rational(1, 3));
  // Gram matrix of delta: g[i][j] = 1 iff g_i g_j = e.
  const Matrix g = gram_matrix(alg, delta);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      CHECK(g(i, j) == (z3.product(i, j) == z3.identity() ? 1 : 0));
  CHECK(is_frobenius(alg, delta));
  CHECK(is_symmetric(alg, dw));
}

TEST_CASE("surface homomorphism counts") {
  for (const auto& g : {catalog("cyclic", 2), catalog("cyclic", 3), catalog("klein", 0), catalog("symmetric", 3)}) {
    for (std::size_t genus = 0; genus <= 2; ++genus)
      CHECK(count_surface_homs(g, genus) == surface_homs_brute_force(g, genus));
  }
  // Commuting pairs in S3: sum of centralizer orders = 6 * 3.
  CHECK(count_surface_homs(catalog("symmetric", 3), 1) == 18);
  CHECK(count_surface_homs(catalog("cyclic", 4), 1) == 16);
  CHECK(code_of([] { count_surface_homs(catalog("symmetric", 4), 3, 1000); }) == ErrorCode::BudgetExceeded);
}
TEST_SUITE_END();
