#include <doctest.h>

#include "corpus.hpp"
#include "syntaft/error.hpp"

using namespace syntaft;

TEST_SUITE_BEGIN("codes");
using namespace corpus;

namespace {
FiniteLanguage lang(std::vector<std::string> words) {
  std::vector<Word> ws;
  for (const auto& w : words) {
    Word x;
    for (char c : w) x.push_back(std::string(1, c));
    ws.push_back(x);
  }
  return FiniteLanguage({"a", "b"}, ws);
}

Word letters(const FiniteGroup& g, std::initializer_list<std::size_t> idx) {
  Word w;
  for (std::size_t i : idx) w.push_back(g.names()[i]);
  return w;
}

std::size_t evaluate_word(const FiniteGroup& g, const Word& w) {
  std::size_t x = g.identity();
  for (const auto& s : w) {
    const auto& n = g.names();
    x = g.product(x, static_cast<std::size_t>(std::find(n.begin(), n.end(), s) - n.begin()));
  }
  return x;
}
}  // namespace

TEST_CASE("Sardinas-Patterson against brute force") {
  const std::vector<std::vector<std::string>> cases{
      {"a", "ab", "ba"}, {"aa", "ab"}, {"a"}, {"a", "ab", "bb"}, {"ab", "abb", "bab"}, {"a", "b", "ab"}, {"ab", "ba"}};
  for (const auto& c : cases) CHECK(is_code(lang(c)) == is_code_brute_force(c, 10));
  CHECK_FALSE(is_code(lang({"a", "ab", "ba"})));
  CHECK(is_code(lang({"aa", "ab"})));
  CHECK(is_code(lang({"a"})));
}

TEST_CASE("finite prefix and suffix predicates") {
  CHECK(is_prefix_finite(lang({"aa", "ab"})));
  CHECK(is_suffix_finite(lang({"aa", "ab"})));
  CHECK(is_biprefix_finite(lang({"aa", "ab"})));
  CHECK_FALSE(is_prefix_finite(lang({"a", "ab"})));
  CHECK(is_prefix_finite(lang({"a", "ba"})));
  CHECK_FALSE(is_suffix_finite(lang({"a", "ba"})));
  CHECK_FALSE(is_biprefix_finite(lang({"a", "ba"})));
}

TEST_CASE("rational prefix and suffix predicates") {
  // a+ over {a}.
  const Dfa a_plus(2, {"a"}, {1, 1}, 0, {1});
  CHECK_FALSE(is_prefix_rational(a_plus));
  CHECK_FALSE(is_suffix_rational(a_plus));
  // Words ending in a, over {a,b}: suffix-closed failure, prefix failure.
  const Dfa ends_a(2, {"a", "b"}, {1, 0, 1, 0}, 0, {1});
  CHECK_FALSE(is_prefix_rational(ends_a));
  // b*a is prefix (a marks the end) but ba has suffix a.
  const Dfa bstar_a(3, {"a", "b"}, {1, 0, 2, 2, 2, 2}, 0, {1});
  CHECK(is_prefix_rational(bstar_a));
  CHECK_FALSE(is_suffix_rational(bstar_a));
  // a b* is suffix but not prefix.
  const Dfa a_bstar(3, {"a", "b"}, {1, 2, 2, 1, 2, 2}, 0, {1});
  CHECK(is_suffix_rational(a_bstar));
  CHECK_FALSE(is_prefix_rational(a_bstar));
  for (const auto& w : words_up_to({"a", "b"}, 5)) {
    Word r(w.rbegin(), w.rend());
    CHECK(reverse_dfa(bstar_a).accepts(r) == bstar_a.accepts(w));
  }
}

TEST_CASE("group code automata") {
  const FiniteGroup z2 = catalog("cyclic", 2);
  const Dfa c2 = group_code_dfa(z2);
  CHECK(c2.accepts(letters(z2, {0})));
  CHECK(c2.accepts(letters(z2, {1, 1})));
  CHECK(c2.accepts(letters(z2, {1, 0, 0, 1})));
  CHECK_FALSE(c2.accepts(letters(z2, {0, 0})));
  CHECK_FALSE(c2.accepts(letters(z2, {1, 1, 1, 1})));
  CHECK(is_prefix_rational(c2));
  CHECK(is_suffix_rational(c2));

  const FiniteGroup z3 = catalog("cyclic", 3);
  const Dfa c3 = group_code_dfa(z3);
  CHECK(c3.accepts(letters(z3, {1, 2})));
  CHECK_FALSE(c3.accepts(letters(z3, {1, 1})));
  CHECK(c3.accepts(letters(z3, {1, 1, 1})));

  const FiniteGroup trivial = catalog("cyclic", 1);
  const Dfa c1 = group_code_dfa(trivial);
  CHECK(c1.accepts(letters(trivial, {0})));
  CHECK_FALSE(c1.accepts(letters(trivial, {0, 0})));
  CHECK_FALSE(c1.accepts({}));
}

TEST_CASE("group star automaton is the word problem") {
  for (const auto& g : {catalog("cyclic", 3), catalog("klein", 0), catalog("symmetric", 3)}) {
    const Dfa star = group_star_dfa(g);
    const Dfa code = group_code_dfa(g);
    CHECK(star.accepts({}));
    for (const auto& w : words_up_to(g.names(), g.order() > 4 ? 4 : 5)) {
      const bool is_e = evaluate_word(g, w) == g.identity();
      CHECK(star.accepts(w) == is_e);
      // First return to e: no proper nonempty prefix evaluates to e.
      bool first_return = is_e && !w.empty();
      for (std::size_t k = 1; first_return && k < w.size(); ++k)
        if (evaluate_word(g, Word(w.begin(), w.begin() + k)) == g.identity()) first_return = false;
      CHECK(code.accepts(w) == first_return);
    }
  }
}

TEST_CASE("group code report") {
  for (const auto& g : {catalog("cyclic", 2), catalog("cyclic", 3), catalog("klein", 0)}) {
    const GroupCodeReport r = verify_group_code(g);
    CHECK(r.group_order == g.order());
    CHECK(r.algebra_dim == g.order());
    CHECK(r.all_pass());
  }
}

TEST_CASE("language validation") {
  CHECK_THROWS_AS(FiniteLanguage({"a"}, {{"b"}}), Error);
  CHECK(lang({"ab", "a"}).max_length() == 2);
}
TEST_SUITE_END();
