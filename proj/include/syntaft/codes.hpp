#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "syntaft/dfa.hpp"
#include "syntaft/groups.hpp"
#include "syntaft/words.hpp"

namespace syntaft {

/// Finite set of nonempty words, stored sorted.
class FiniteLanguage {
 public:
  FiniteLanguage(std::vector<Symbol> alphabet, std::vector<Word> words);

  const std::vector<Symbol>& alphabet() const noexcept { return alphabet_; }
  const std::vector<Word>& words() const noexcept { return words_; }
  std::size_t max_length() const;

  friend bool operator==(const FiniteLanguage&, const FiniteLanguage&) = default;

 private:
  std::vector<Symbol> alphabet_;
  std::vector<Word> words_;
};

/// Sardinas-Patterson: no dangling-suffix set contains the empty word.
bool is_code(const FiniteLanguage& lang);

bool is_prefix_finite(const FiniteLanguage& lang);
bool is_suffix_finite(const FiniteLanguage& lang);
bool is_biprefix_finite(const FiniteLanguage& lang);

/// No accepting state reaches an accepting state by a nonempty path.
bool is_prefix_rational(const Dfa& dfa);
/// Prefix test on the determinized reversal.
bool is_suffix_rational(const Dfa& dfa);
/// Subset construction on the reversed automaton; the result is complete.
Dfa reverse_dfa(const Dfa& dfa);

/// First-return automaton of the group code: state 0 is the start, states
/// 1..|G|-1 the non-identity running products, then accept, then dead.
Dfa group_code_dfa(const FiniteGroup& g);
/// States = group elements; start = accept = identity.
Dfa group_star_dfa(const FiniteGroup& g);

struct GroupCodeReport {
  std::size_t group_order = 0;
  bool biprefix = false;
  std::size_t algebra_dim = 0;
  bool dimension_matches = false;
  /// False when the letter map |g| -> g does not extend to an isomorphism.
  bool letter_isomorphism = false;
  bool semisimple = false;

  bool all_pass() const { return biprefix && dimension_matches && letter_isomorphism && semisimple; }
};

GroupCodeReport verify_group_code(const FiniteGroup& g);

}  // namespace syntaft
