#pragma once

#include <cstddef>
#include <limits>
#include <vector>

#include "syntaft/words.hpp"

namespace syntaft {

/// Deterministic automaton. Transitions may be missing (kMissing) so that
/// partial automata can be loaded and rejected where completeness matters.
class Dfa {
 public:
  static constexpr std::size_t kMissing = std::numeric_limits<std::size_t>::max();

  Dfa(std::size_t states, std::vector<Symbol> alphabet, std::vector<std::size_t> transitions,
      std::size_t start, std::vector<std::size_t> accepting);

  std::size_t states() const noexcept { return states_; }
  const std::vector<Symbol>& alphabet() const noexcept { return alphabet_; }
  std::size_t start() const noexcept { return start_; }
  const std::vector<std::size_t>& accepting() const noexcept { return accepting_; }
  bool is_accepting(std::size_t state) const { return accepting_mask_[state]; }

  std::size_t next(std::size_t state, std::size_t letter) const {
    return transitions_[state * alphabet_.size() + letter];
  }
  std::size_t symbol_index(const Symbol& s) const;
  bool is_complete() const;
  bool accepts(const Word& word) const;

  friend bool operator==(const Dfa&, const Dfa&) = default;

 private:
  std::size_t states_;
  std::vector<Symbol> alphabet_;
  std::vector<std::size_t> transitions_;
  std::size_t start_;
  std::vector<std::size_t> accepting_;
  std::vector<bool> accepting_mask_;
};

}  // namespace syntaft
