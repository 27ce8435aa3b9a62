#include <algorithm>

#include "syntaft/error.hpp"
#include "syntaft/mso.hpp"

namespace syntaft {

namespace {

// Formula with variables resolved to slots and letters to indices.
struct Compiled {
  NodeKind kind = NodeKind::Const;
  bool boolean = false;
  Rational value;
  long symbol = -1;
  std::size_t a = 0;
  std::size_t b = 0;
  long left = -1;
  long right = -1;
};

struct Scope {
  std::vector<std::string> positions;
  std::vector<std::string> sets;

  static std::size_t slot(const std::vector<std::string>& names, const std::string& v) {
    for (std::size_t i = names.size(); i-- > 0;)
      if (names[i] == v) return i;
    fail(ErrorCode::UnassignedVariable, "variable '" + v + "' is not assigned");
  }
};

class Compiler {
 public:
  Compiler(const std::vector<Symbol>& symbols, Scope scope) : symbols_(symbols), scope_(std::move(scope)) {}

  long compile(const Formula& f) {
    Compiled c;
    c.kind = f->kind;
    c.boolean = is_boolean(f);
    switch (f->kind) {
      case NodeKind::Const:
        c.value = f->value;
        break;
      case NodeKind::LetterAt:
        c.symbol = static_cast<long>(std::find(symbols_.begin(), symbols_.end(), f->symbol) - symbols_.begin());
        c.a = Scope::slot(scope_.positions, f->first);
        break;
      case NodeKind::Leq:
        c.a = Scope::slot(scope_.positions, f->first);
        c.b = Scope::slot(scope_.positions, f->second);
        break;
      case NodeKind::InSet:
        c.a = Scope::slot(scope_.positions, f->first);
        c.b = Scope::slot(scope_.sets, f->second);
        break;
      case NodeKind::ExistsPos:
      case NodeKind::ForallPos:
        c.a = bind(scope_.positions, f, max_positions_, c.left);
        break;
      case NodeKind::ExistsSet:
      case NodeKind::ForallSet:
        c.a = bind(scope_.sets, f, max_sets_, c.left);
        break;
      default:
        c.left = compile(f->left);
        if (f->right) c.right = compile(f->right);
    }
    nodes_.push_back(std::move(c));
    return static_cast<long>(nodes_.size() - 1);
  }

  std::vector<Compiled> nodes_;
  std::size_t max_positions_ = 0;
  std::size_t max_sets_ = 0;

 private:
  // Returns the slot of the bound variable.
  std::size_t bind(std::vector<std::string>& names, const Formula& f, std::size_t& high, long& body) {
    names.push_back(f->first);
    high = std::max(high, names.size());
    body = compile(f->left);
    names.pop_back();
    return names.size();
  }

  const std::vector<Symbol>& symbols_;
  Scope scope_;
};

class Evaluator {
 public:
  Evaluator(const std::vector<Compiled>& nodes, std::vector<long> word, std::uint64_t budget)
      : nodes_(nodes), word_(std::move(word)), budget_(budget) {}

  std::vector<std::size_t> positions;
  std::vector<std::uint64_t> sets;

  Rational value(long i) {
    const Compiled& c = nodes_[static_cast<std::size_t>(i)];
    if (c.boolean) return truth(i) ? Rational(1) : Rational(0);
    const std::size_t n = word_.size();
    switch (c.kind) {
      case NodeKind::Const:
        return c.value;
      case NodeKind::Or:
        return value(c.left) + value(c.right);
      case NodeKind::And: {
        Rational v = value(c.left);
        if (v == 0) return v;
        return v * value(c.right);
      }
      case NodeKind::ExistsPos: {
        Rational acc(0);
        for (std::size_t p = 1; p <= n; ++p) {
          charge();
          positions[c.a] = p;
          acc += value(c.left);
        }
        return acc;
      }
      case NodeKind::ForallPos: {
        Rational acc(1);
        for (std::size_t p = 1; p <= n && acc != 0; ++p) {
          charge();
          positions[c.a] = p;
          acc *= value(c.left);
        }
        return acc;
      }
      case NodeKind::ExistsSet: {
        Rational acc(0);
        const std::uint64_t subsets = subset_count();
        for (std::uint64_t mask = 0; mask < subsets; ++mask) {
          charge();
          sets[c.a] = mask;
          acc += value(c.left);
        }
        return acc;
      }
      case NodeKind::ForallSet:
        return truth(i) ? Rational(1) : Rational(0);
      default:
        fail(ErrorCode::NotRestricted, "unexpected node in weighted position");
    }
  }

  bool truth(long i) {
    const Compiled& c = nodes_[static_cast<std::size_t>(i)];
    const std::size_t n = word_.size();
    switch (c.kind) {
      case NodeKind::Const:
        return c.value != 0;
      case NodeKind::LetterAt:
        return word_[positions[c.a] - 1] == c.symbol;
      case NodeKind::Leq:
        return positions[c.a] <= positions[c.b];
      case NodeKind::InSet:
        return ((sets[c.b] >> (positions[c.a] - 1)) & 1U) != 0;
      case NodeKind::Not:
        return !truth(c.left);
      case NodeKind::And:
        return truth(c.left) && truth(c.right);
      case NodeKind::ForallPos:
        for (std::size_t p = 1; p <= n; ++p) {
          charge();
          positions[c.a] = p;
          if (!truth(c.left)) return false;
        }
        return true;
      case NodeKind::ForallSet: {
        const std::uint64_t subsets = subset_count();
        for (std::uint64_t mask = 0; mask < subsets; ++mask) {
          charge();
          sets[c.a] = mask;
          if (!truth(c.left)) return false;
        }
        return true;
      }
      default:
        fail(ErrorCode::NotRestricted, "non-boolean node under a boolean context");
    }
  }

 private:
  void charge() {
    if (++spent_ > budget_) {
      fail(ErrorCode::BudgetExceeded,
           "formula evaluation exceeds the budget of " + std::to_string(budget_) + " steps");
    }
  }

  std::uint64_t subset_count() const {
    if (word_.size() >= 63 || (std::uint64_t{1} << word_.size()) > budget_) {
      fail(ErrorCode::BudgetExceeded, "set quantifier over a word of length " +
                                          std::to_string(word_.size()) + " exceeds the budget");
    }
    return std::uint64_t{1} << word_.size();
  }

  const std::vector<Compiled>& nodes_;
  std::vector<long> word_;
  std::uint64_t budget_;
  std::uint64_t spent_ = 0;
};

}  // namespace

Rational evaluate_formula(const Formula& f, const Word& word, const Assignment& assignment,
                          std::uint64_t budget) {
  if (!is_restricted(f)) {
    fail(ErrorCode::NotRestricted, "a universal quantifier has a body outside the restricted fragment");
  }
  Scope scope;
  std::vector<std::size_t> positions;
  std::vector<std::uint64_t> sets;
  for (const auto& v : free_variables(f)) {
    if (is_first_order_name(v)) {
      auto it = assignment.positions.find(v);
      if (it == assignment.positions.end()) {
        fail(ErrorCode::UnassignedVariable, "position variable '" + v + "' is not assigned");
      }
      if (it->second < 1 || it->second > word.size()) {
        fail(ErrorCode::UnassignedVariable, "position of '" + v + "' is outside 1.." + std::to_string(word.size()));
      }
      scope.positions.push_back(v);
      positions.push_back(it->second);
    } else {
      auto it = assignment.sets.find(v);
      if (it == assignment.sets.end()) {
        fail(ErrorCode::UnassignedVariable, "set variable '" + v + "' is not assigned");
      }
      if (word.size() >= 63) fail(ErrorCode::BudgetExceeded, "word too long for set variables");
      std::uint64_t mask = 0;
      for (std::size_t p : it->second) {
        if (p < 1 || p > word.size()) {
          fail(ErrorCode::UnassignedVariable, "set '" + v + "' contains a position outside the word");
        }
        mask |= std::uint64_t{1} << (p - 1);
      }
      scope.sets.push_back(v);
      sets.push_back(mask);
    }
  }
  const std::vector<Symbol> symbols = mentioned_symbols(f);
  Compiler compiler(symbols, scope);
  const long root = compiler.compile(f);
  std::vector<long> letters;
  for (const auto& s : word) {
    auto it = std::find(symbols.begin(), symbols.end(), s);
    letters.push_back(it == symbols.end() ? -2 : static_cast<long>(it - symbols.begin()));
  }
  Evaluator ev(compiler.nodes_, std::move(letters), budget);
  ev.positions = positions;
  ev.positions.resize(compiler.max_positions_ + 1, 0);
  ev.sets = sets;
  ev.sets.resize(compiler.max_sets_ + 1, 0);
  return ev.value(root);
}

namespace {

Formula conj(std::vector<Formula> parts) {
  Formula f = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) f = product(f, parts[i]);
  return f;
}

Formula strictly_before(const std::string& x, const std::string& y) {
  return product(leq(x, y), negate(leq(y, x)));
}

// y is the position immediately before x.
Formula successor(const std::string& y, const std::string& x) {
  return product(strictly_before(y, x),
                 forall_pos("z", negate(product(strictly_before(y, "z"), strictly_before("z", x)))));
}

Formula first_position(const std::string& x) { return forall_pos("y", leq(x, "y")); }
Formula last_position(const std::string& x) { return forall_pos("y", leq("y", x)); }

std::string state_set(std::size_t q) { return "X" + std::to_string(q + 1); }

// The position before x lies in X_q.
Formula previous_in(const std::string& x, std::size_t q) {
  return negate(forall_pos("y", negate(product(successor("y", x), in_set("y", state_set(q))))));
}

Formula weighted_sum(const std::vector<Formula>& terms) {
  if (terms.empty()) return constant(0);
  Formula f = terms.front();
  for (std::size_t i = 1; i < terms.size(); ++i) f = sum(f, terms[i]);
  return f;
}

}  // namespace

Formula wfa_to_formula(const LinearRepresentation& rep) {
  const std::size_t n = rep.dim();
  if (n == 0) return constant(0);
  const auto& alphabet = rep.alphabet();

  // Position p lies in X_q iff the run is in state q after reading p.
  std::vector<Formula> none_of;
  std::vector<Formula> exclusive;
  for (std::size_t q = 0; q < n; ++q) {
    none_of.push_back(negate(in_set("x", state_set(q))));
    for (std::size_t r = q + 1; r < n; ++r) {
      exclusive.push_back(negate(product(in_set("x", state_set(q)), in_set("x", state_set(r)))));
    }
  }
  std::vector<Formula> one_state{negate(conj(none_of))};
  one_state.insert(one_state.end(), exclusive.begin(), exclusive.end());
  const Formula partition = forall_pos("x", conj(one_state));

  std::vector<Formula> steps;
  for (std::size_t a = 0; a < alphabet.size(); ++a) {
    const Vector entry = rep.initial() * rep.transition(a);
    for (std::size_t r = 0; r < n; ++r) {
      if (entry[r] == 0) continue;
      steps.push_back(product(constant(entry[r]), conj({letter_at("x", alphabet[a]),
                                                        in_set("x", state_set(r)), first_position("x")})));
    }
  }
  for (std::size_t a = 0; a < alphabet.size(); ++a) {
    const Matrix& mu = rep.transition(a);
    for (std::size_t q = 0; q < n; ++q)
      for (std::size_t r = 0; r < n; ++r) {
        if (mu(q, r) == 0) continue;
        steps.push_back(product(constant(mu(q, r)), conj({letter_at("x", alphabet[a]),
                                                          in_set("x", state_set(r)), previous_in("x", q)})));
      }
  }
  const Formula weight = forall_pos("x", weighted_sum(steps));

  std::vector<Formula> finals;
  for (std::size_t r = 0; r < n; ++r) {
    if (rep.final_weights()[r] == 0) continue;
    finals.push_back(product(constant(rep.final_weights()[r]),
                             negate(forall_pos("x", negate(product(in_set("x", state_set(r)),
                                                                   last_position("x")))))));
  }
  Formula run = conj({partition, weight, weighted_sum(finals)});
  for (std::size_t q = n; q-- > 0;) run = exists_set(state_set(q), run);

  const Rational empty = dot(rep.initial(), rep.final_weights());
  if (empty == 0) return run;
  // forall x. 0 holds exactly on the empty word.
  return sum(run, product(constant(empty), forall_pos("x", constant(0))));
}

LtftDefinabilityReport ltft_definability_report(const FinAlgebra& alg, std::size_t max_length,
                                                std::uint64_t budget) {
  if (!is_semisimple(alg)) fail(ErrorCode::NotSemisimple, "the LTFT report needs a semisimple algebra");
  const LinearRepresentation series = series_from_algebra(alg, canonical_form(alg));
  const LinearRepresentation minimal = minimize(series);
  const Formula formula = wfa_to_formula(minimal);
  LtftDefinabilityReport r;
  r.algebra_dim = alg.dim();
  r.minimal_dim = minimal.dim();
  r.alphabet_size = series.alphabet().size();
  r.formula_size = formula_size(formula);
  r.restricted = is_restricted(formula);
  r.max_length = max_length;
  r.round_trip = true;
  for (const auto& w : words_up_to(series.alphabet(), max_length)) {
    ++r.words_checked;
    if (evaluate_formula(formula, w, {}, budget) != evaluate(series, w)) {
      r.round_trip = false;
      r.counterexample = w;
      break;
    }
  }
  return r;
}

}  // namespace syntaft
