#pragma once

// Weighted finite automata as linear representations (initial, transitions,
// final) over Q, and the syntactic algebra of the series they realize.

#include <cstddef>
#include <vector>

#include "syntaft/algebra.hpp"
#include "syntaft/dfa.hpp"
#include "syntaft/exactla.hpp"
#include "syntaft/words.hpp"

namespace syntaft {

/// S(w) = initial * mu(w_1) * ... * mu(w_m) * final, with row-vector
/// initial weights and column-vector final weights.
class LinearRepresentation {
 public:
  LinearRepresentation(std::vector<Symbol> alphabet, Vector initial, std::vector<Matrix> transitions,
                       Vector final_weights);

  const std::vector<Symbol>& alphabet() const noexcept { return alphabet_; }
  std::size_t dim() const noexcept { return initial_.size(); }
  const Vector& initial() const noexcept { return initial_; }
  const std::vector<Matrix>& transitions() const noexcept { return transitions_; }
  const Matrix& transition(std::size_t letter) const { return transitions_[letter]; }
  const Vector& final_weights() const noexcept { return final_; }

  std::size_t symbol_index(const Symbol& s) const;

  friend bool operator==(const LinearRepresentation&, const LinearRepresentation&) = default;

 private:
  std::vector<Symbol> alphabet_;
  Vector initial_;
  std::vector<Matrix> transitions_;
  Vector final_;
};

struct SyntacticPresentation {
  FinAlgebra algebra;
  /// Coordinates of the image of each letter, in alphabet order.
  std::vector<Vector> letter_images;
  /// The induced functional with S = functional o pi.
  LinearFunctional functional;
  /// basis_words[i] is a word whose image is the i-th basis element.
  std::vector<Word> basis_words;
  /// The minimal representation the algebra was read off from.
  LinearRepresentation minimal;

  /// Coordinates of pi(w).
  Vector image(const Word& word) const;
};

Rational evaluate(const LinearRepresentation& rep, const Word& word);

/// Forward (reachable) then backward (observable) reduction. The result has
/// dimension equal to the Hankel rank of the series.
LinearRepresentation minimize(const LinearRepresentation& rep);

/// Exact series equality. Alphabets must contain the same symbols.
bool equivalent(const LinearRepresentation& a, const LinearRepresentation& b);

/// Span of the transition monoid of the minimal representation.
SyntacticPresentation syntactic_algebra(const LinearRepresentation& rep);

/// Decided by commutation of the letter images in the syntactic algebra.
bool is_exchangeable(const LinearRepresentation& rep);

/// Definitional check: S_v = S_w whenever v and w are letter permutations of
/// each other, over all words of length <= max_length.
bool exchangeable_up_to(const LinearRepresentation& rep, std::size_t max_length);

/// One letter per basis element, mu(x_i) = right multiplication by e_i,
/// initial = unit, final = f. Throws InvalidAlgebra on a non-algebra.
LinearRepresentation series_from_algebra(const FinAlgebra& alg, const LinearFunctional& f);

/// 0/1 representation of a complete DFA. Throws IncompleteAutomaton.
LinearRepresentation char_series(const Dfa& dfa);

}  // namespace syntaft
