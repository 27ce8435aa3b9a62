#include <doctest.h>

#include <filesystem>

#include "corpus.hpp"
#include "syntaft/error.hpp"
#include "syntaft/io.hpp"

using namespace syntaft;
using namespace corpus;

TEST_SUITE_BEGIN("io");

namespace {
std::string fixture(const std::string& name) { return read_file(std::string(SYNTAFT_DATA_DIR) + "/" + name); }

std::string rewrite(const std::string& text) {
  switch (detect_kind(text)) {
    case FileKind::Algebra: return write_algebra(read_algebra(text));
    case FileKind::Functional: return write_functional(read_functional(text));
    case FileKind::Group: return write_group(read_group(text));
    case FileKind::Wfa: return write_wfa(read_wfa(text));
    case FileKind::Dfa: return write_dfa(read_dfa(text));
    case FileKind::Language: return write_language(read_language(text));
    case FileKind::Triangulation: return write_triangulation(read_triangulation(text));
    case FileKind::Formula: return write_formula_file(read_formula_file(text));
    case FileKind::Moves: return write_moves(read_moves(text, standard_triangulation(2)));
  }
  return {};
}
}  // namespace

TEST_CASE("canonical fixtures round trip byte for byte") {
  std::size_t count = 0;
  for (const auto& entry : std::filesystem::directory_iterator(SYNTAFT_DATA_DIR)) {
    const std::string name = entry.path().filename().string();
    const std::string text = read_file(entry.path().string());
    if (name == "scramble.moves") continue;  // random lines expand on read
    const std::string once = rewrite(text);
    CHECK_MESSAGE(rewrite(once) == once, name);
    if (text.find('#') != std::string::npos) continue;  // hand-annotated
    CHECK_MESSAGE(once == text, name);
    ++count;
  }
  CHECK(count >= 30);
}

TEST_CASE("fixtures match the builders") {
  CHECK(read_algebra(fixture("m2.alg")) == matrix_algebra(2));
  CHECK(read_algebra(fixture("q.alg")) == field_algebra());
  CHECK(read_algebra(fixture("qxqxq.alg")) == diagonal_algebra(3));
  CHECK(read_algebra(fixture("dual_numbers.alg")) == dual_numbers());
  CHECK(read_algebra(fixture("upper_triangular.alg")) == upper_triangular_algebra());
  CHECK(read_algebra(fixture("q_s3.alg")) == group_alg("symmetric", 3));
  CHECK(read_functional(fixture("m2_trace.functional")) == trace_m2());
  CHECK(read_group(fixture("s3.group")) == catalog("symmetric", 3));
  CHECK(read_group(fixture("klein.group")) == catalog("klein", 0));
  CHECK(read_wfa(fixture("a_counting.wfa")) == a_counting());
  CHECK(read_wfa(fixture("constant_one.wfa")) == constant_one());
  CHECK(read_dfa(fixture("even_a.dfa")) == even_a());
  CHECK(read_triangulation(fixture("genus2.tri")) == standard_triangulation(2));
  const auto z2 = group_algebra(catalog("cyclic", 2), Normalization::DijkgraafWitten);
  CHECK(read_functional(fixture("z2_dw.functional")) == z2.second);
  const FormulaFile f = read_formula_file(fixture("exists_a.formula"));
  CHECK(structurally_equal(f.formula, parse_formula("exists x. P_a(x)")));
  CHECK(f.alphabet == std::vector<Symbol>{"a", "b"});
}

TEST_CASE("moves files") {
  const Triangulation start = standard_triangulation(2);
  const std::vector<Move> moves = read_moves(fixture("scramble.moves"), start);
  REQUIRE(moves.size() == 6);
  CHECK(moves[0].kind == MoveKind::OneThree);
  CHECK(moves[0].site == 0);
  CHECK(moves[1].kind == MoveKind::TwoTwo);
  const Triangulation after_two = apply_moves(start, {moves[0], moves[1]});
  const std::vector<Move> tail(moves.begin() + 2, moves.end());
  CHECK(tail == random_moves(after_two, 4, 11));
  CHECK(read_moves(write_moves(moves), start) == moves);
}

TEST_CASE("parse errors carry positions") {
  try {
    read_functional("syntaft-functional v1\ndim 2\ncoeffs 1 1/0\n");
    FAIL("accepted");
  } catch (const ParseError& e) {
    CHECK(e.code() == ErrorCode::ParseError);
    CHECK(e.line() == 3);
    CHECK(e.column() == 10);
  }
  CHECK_THROWS_AS(detect_kind("syntaft-unknown v1\n"), ParseError);
  CHECK_THROWS_AS(detect_kind(""), ParseError);
  CHECK_THROWS_AS(read_algebra("syntaft-alg v1\ndim 2\n"), ParseError);
  CHECK_THROWS_AS(read_functional("syntaft-alg v1\ndim 1\n"), ParseError);
  CHECK_THROWS_AS(read_group("syntaft-group v1\norder 2\nnames e s\ntable\ne s\ns x\n"), ParseError);
  CHECK_THROWS_AS(read_file("/nonexistent/file.alg"), ParseError);
}

TEST_CASE("comments and blank lines are ignored") {
  const std::string text = "# header comment\nsyntaft-functional v1\n\ndim 2   # size\ncoeffs 1 -3/6\n";
  CHECK(read_functional(text) == LinearFunctional(Vector{1, Rational(-1, 2)}));
}

TEST_CASE("write then read") {
  const FiniteLanguage lang({"a", "b"}, {{"a"}, {"a", "b"}, {"b", "a"}});
  CHECK(read_language(write_language(lang)) == lang);
  const Dfa partial(2, {"a", "b"}, {1, Dfa::kMissing, 1, 0}, 0, {1});
  CHECK(read_dfa(write_dfa(partial)) == partial);
  const Triangulation t = standard_triangulation(1);
  std::vector<bool> twist(t.slot_count(), false);
  twist[0] = twist[t.partner(0)] = true;
  const Triangulation klein(t.triangle_count(), t.pairing(), twist);
  CHECK(read_triangulation(write_triangulation(klein)) == klein);
  const FormulaFile ff{parse_formula("forall X. exists x. (x in X) * 1/3"), {}};
  CHECK(structurally_equal(read_formula_file(write_formula_file(ff)).formula, ff.formula));
}

TEST_SUITE_END();
