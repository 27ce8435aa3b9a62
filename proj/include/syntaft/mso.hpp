#pragma once

// Restricted weighted MSO over finite words: syntax, the restriction check,
// direct (exponential) semantics and the automaton-to-formula translation.

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "syntaft/algebra.hpp"
#include "syntaft/wfa.hpp"
#include "syntaft/words.hpp"

namespace syntaft {

enum class NodeKind {
  Const,
  LetterAt,
  Leq,
  InSet,
  Not,
  Or,
  And,
  ExistsPos,
  ExistsSet,
  ForallPos,
  ForallSet,
};

struct SourcePos {
  std::size_t line = 0;
  std::size_t column = 0;
};

struct FormulaNode;
using Formula = std::shared_ptr<const FormulaNode>;

/// Variables: `first` is the first-order variable of atoms and the bound
/// variable of quantifiers; `second` is the right variable of Leq or the set
/// variable of InSet.
struct FormulaNode {
  NodeKind kind = NodeKind::Const;
  Rational value;
  Symbol symbol;
  std::string first;
  std::string second;
  Formula left;
  Formula right;
  SourcePos pos;
};

Formula constant(const Rational& c);
Formula letter_at(const std::string& var, const Symbol& symbol);
Formula leq(const std::string& x, const std::string& y);
Formula in_set(const std::string& x, const std::string& set);
/// Throws SyntaxError unless `f` is boolean.
Formula negate(const Formula& f);
Formula sum(const Formula& f, const Formula& g);
Formula product(const Formula& f, const Formula& g);
Formula exists_pos(const std::string& x, const Formula& body);
Formula exists_set(const std::string& set, const Formula& body);
Formula forall_pos(const std::string& x, const Formula& body);
Formula forall_set(const std::string& set, const Formula& body);

bool is_first_order_name(std::string_view name);
bool is_second_order_name(std::string_view name);

/// Grammar: constants p/q, atoms P_<sym>(x), x <= y, x in X; ~ (not),
/// & or * (product), | or + (sum); exists/forall with a lowercase
/// (position) or uppercase (set) variable followed by '.'.
/// Precedence ~ > & > |, quantifier bodies extend as far right as possible.
/// Throws ParseError with code SyntaxError.
Formula parse_formula(std::string_view text);
/// Inverse of parse_formula up to source positions.
std::string to_string(const Formula& f);
bool structurally_equal(const Formula& a, const Formula& b);
std::size_t formula_size(const Formula& f);
std::set<std::string> free_variables(const Formula& f);
/// Letter symbols mentioned in the formula, sorted.
std::vector<Symbol> mentioned_symbols(const Formula& f);

/// Atoms, 0/1 constants, Not, And, ForallPos and ForallSet over boolean parts.
bool is_boolean(const Formula& f);
/// Sum/product closure of constants and boolean formulas.
bool is_almost_boolean(const Formula& f);
/// ForallPos bodies almost-boolean, ForallSet bodies boolean.
bool is_restricted(const Formula& f);

/// Positions are 1-based.
struct Assignment {
  std::map<std::string, std::size_t> positions;
  std::map<std::string, std::set<std::size_t>> sets;
};

inline constexpr std::uint64_t kDefaultEvaluationBudget = 100'000'000;

/// Direct semantics; every quantifier step costs one unit of budget.
/// Throws UnassignedVariable, NotRestricted, BudgetExceeded.
Rational evaluate_formula(const Formula& f, const Word& word, const Assignment& assignment = {},
                          std::uint64_t budget = kDefaultEvaluationBudget);

/// Sentence whose value on every word equals the series of `rep`.
Formula wfa_to_formula(const LinearRepresentation& rep);

struct LtftDefinabilityReport {
  std::size_t algebra_dim = 0;
  std::size_t minimal_dim = 0;
  std::size_t alphabet_size = 0;
  std::size_t formula_size = 0;
  bool restricted = false;
  std::size_t max_length = 0;
  std::size_t words_checked = 0;
  bool round_trip = false;
  /// First disagreeing word when round_trip is false.
  Word counterexample;

  bool passes() const { return restricted && round_trip; }
};

inline constexpr std::size_t kDefaultReportLength = 4;

/// series_from_algebra(alg, canonical form) -> minimize -> wfa_to_formula,
/// then compares both sides on all words up to max_length.
/// Throws NotSemisimple.
LtftDefinabilityReport ltft_definability_report(const FinAlgebra& alg,
                                                std::size_t max_length = kDefaultReportLength,
                                                std::uint64_t budget = kDefaultEvaluationBudget);

}  // namespace syntaft
