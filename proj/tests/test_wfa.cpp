#include <doctest.h>

#include "corpus.hpp"
#include "syntaft/error.hpp"

using namespace syntaft;

TEST_SUITE_BEGIN("wfa");
using namespace corpus;

namespace {
LinearRepresentation constant_one_minimal() {
  return LinearRepresentation({"a", "b"}, {1}, {Matrix{{1}}, Matrix{{1}}}, {1});
}
LinearRepresentation zero_series() {
  return LinearRepresentation({"a", "b"}, {1, 1}, {Matrix::identity(2), Matrix::identity(2)}, {0, 0});
}
}  // namespace

TEST_CASE("evaluate") {
  CHECK(evaluate(constant_one_minimal(), {"a", "b", "b"}) == 1);
  CHECK(evaluate(a_counting(), {"a", "a", "b"}) == 2);
  CHECK(evaluate(a_counting(), {}) == 0);
  CHECK(evaluate(ab_counting(), {"a", "b", "a", "b"}) == 2);
  CHECK_THROWS_AS(evaluate(a_counting(), {"c"}), Error);
}

TEST_CASE("representation shape is validated") {
  CHECK_THROWS_AS(LinearRepresentation({"a"}, {1, 0}, {Matrix::identity(3)}, {0, 1}), Error);
  CHECK_THROWS_AS(LinearRepresentation({"a", "a"}, {1}, {Matrix{{1}}, Matrix{{1}}}, {1}), Error);
}

TEST_CASE("minimize reaches the Hankel rank") {
  CHECK(minimize(constant_one()).dim() == 1);
  CHECK(minimize(a_counting()).dim() == 2);
  CHECK(minimize(zero_series()).dim() == 0);
  for (const auto& rep : {constant_one(), a_counting(), ab_counting(), char_series(even_a())}) {
    const LinearRepresentation m = minimize(rep);
    CHECK(m.dim() == hankel_rank(rep, rep.dim()));
    CHECK(agree_up_to(rep, m, rep.dim() + m.dim()));
  }
}

TEST_CASE("equivalence") {
  CHECK(equivalent(a_counting(), a_counting()));
  CHECK_FALSE(equivalent(constant_one_minimal(), zero_series()));
  CHECK(equivalent(constant_one_minimal(), constant_one()));
  const LinearRepresentation other({"x"}, {1}, {Matrix{{1}}}, {1});
  CHECK_THROWS_AS(equivalent(other, constant_one()), Error);
}

TEST_CASE("syntactic algebras of small series") {
  const SyntacticPresentation one = syntactic_algebra(constant_one());
  CHECK(one.algebra.dim() == 1);
  CHECK(one.functional.coefficients() == Vector{1});

  const SyntacticPresentation count = syntactic_algebra(a_counting());
  CHECK(count.algebra.dim() == 2);
  CHECK(is_commutative(count.algebra));
  CHECK_FALSE(is_semisimple(count.algebra));

  const SyntacticPresentation z2 = syntactic_algebra(char_series(group_star_dfa(catalog("cyclic", 2))));
  CHECK(z2.algebra.dim() == 2);
  CHECK(is_semisimple(z2.algebra));
  CHECK(is_commutative(z2.algebra));

  CHECK(syntactic_algebra(zero_series()).algebra.dim() == 0);

  // S = f o pi on sample words.
  for (const auto& w : words_up_to({"a", "b"}, 4)) {
    CHECK(count.functional(count.image(w)) == evaluate(a_counting(), w));
  }
}

TEST_CASE("exchangeability") {
  CHECK(is_exchangeable(a_counting()));
  CHECK(is_exchangeable(constant_one()));
  // Words starting with a.
  const Dfa starts_a(3, {"a", "b"}, {1, 2, 1, 1, 2, 2}, 0, {1});
  CHECK_FALSE(is_exchangeable(char_series(starts_a)));
  CHECK_FALSE(exchangeable_up_to(char_series(starts_a), 2));
  CHECK(exchangeable_by_definition(a_counting(), 6));
  CHECK_FALSE(exchangeable_by_definition(char_series(starts_a), 2));
}

TEST_CASE("series from algebras") {
  const LinearRepresentation q = series_from_algebra(field_algebra(), functional({1}));
  CHECK(evaluate(q, {"1", "1", "1"}) == 1);

  const LinearRepresentation z2 = series_from_algebra(group_alg("cyclic", 2), functional({1, 0}));
  CHECK(evaluate(z2, {"s", "s"}) == 1);
  CHECK(evaluate(z2, {"s"}) == 0);

  const LinearRepresentation m2 = series_from_algebra(matrix_algebra(2), trace_m2());
  CHECK(evaluate(m2, {"E12", "E21"}) == 1);
  CHECK(evaluate(m2, {"E12", "E12"}) == 0);

  FinAlgebra broken = matrix_algebra(2);
  std::vector<Rational> c = broken.structure_constants();
  c[(1 * 4 + 2) * 4 + 0] = 0;  // E12 E21 no longer E11
  CHECK_THROWS_AS(series_from_algebra(FinAlgebra(broken.basis_names(), c, broken.unit()), trace_m2()), Error);
}

TEST_CASE("characteristic series") {
  const Dfa all(1, {"a", "b"}, {0, 0}, 0, {0});
  CHECK(equivalent(char_series(all), constant_one()));
  const Dfa partial(1, {"a", "b"}, {0, Dfa::kMissing}, 0, {0});
  CHECK_THROWS_AS(char_series(partial), Error);
}
TEST_SUITE_END();
