#include "syntaft/words.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "syntaft/dfa.hpp"
#include "syntaft/error.hpp"

namespace syntaft {

std::vector<Word> words_up_to(const std::vector<Symbol>& alphabet, std::size_t max_length) {
  std::vector<Word> out{Word{}};
  std::size_t layer_begin = 0;
  for (std::size_t len = 1; len <= max_length; ++len) {
    const std::size_t layer_end = out.size();
    for (std::size_t i = layer_begin; i < layer_end; ++i) {
      for (const auto& s : alphabet) {
        Word w = out[i];
        w.push_back(s);
        out.push_back(std::move(w));
      }
    }
    layer_begin = layer_end;
  }
  return out;
}

std::string word_to_string(const Word& word) {
  const bool compact =
      std::all_of(word.begin(), word.end(), [](const Symbol& s) { return s.size() == 1; });
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (!compact && i > 0) out += ' ';
    out += word[i];
  }
  return out;
}

Word parse_word(std::string_view text, const std::vector<Symbol>& alphabet) {
  auto known = [&](const std::string& s) {
    return std::find(alphabet.begin(), alphabet.end(), s) != alphabet.end();
  };
  Word word;
  const bool spaced = std::any_of(text.begin(), text.end(), [](char c) {
    return std::isspace(static_cast<unsigned char>(c)) || c == ',';
  });
  if (spaced) {
    std::string buffer(text);
    std::replace(buffer.begin(), buffer.end(), ',', ' ');
    std::istringstream in(buffer);
    std::string token;
    while (in >> token) {
      if (!known(token)) fail(ErrorCode::UnknownSymbol, "symbol '" + token + "' not in alphabet");
      word.push_back(token);
    }
    return word;
  }
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t best = 0;
    for (const auto& s : alphabet) {
      if (s.size() > best && text.substr(pos, s.size()) == s) best = s.size();
    }
    if (best == 0) {
      fail(ErrorCode::UnknownSymbol,
           "cannot read a symbol at '" + std::string(text.substr(pos)) + "'");
    }
    word.emplace_back(text.substr(pos, best));
    pos += best;
  }
  return word;
}

bool is_valid_alphabet(const std::vector<Symbol>& alphabet) {
  std::set<Symbol> seen;
  for (const auto& s : alphabet) {
    if (s.empty()) return false;
    if (std::any_of(s.begin(), s.end(),
                    [](char c) { return std::isspace(static_cast<unsigned char>(c)); })) {
      return false;
    }
    if (!seen.insert(s).second) return false;
  }
  return true;
}

Dfa::Dfa(std::size_t states, std::vector<Symbol> alphabet, std::vector<std::size_t> transitions,
         std::size_t start, std::vector<std::size_t> accepting)
    : states_(states),
      alphabet_(std::move(alphabet)),
      transitions_(std::move(transitions)),
      start_(start),
      accepting_(std::move(accepting)),
      accepting_mask_(states, false) {
  if (states_ == 0) fail(ErrorCode::InvalidLanguage, "automaton needs at least one state");
  if (alphabet_.empty() || !is_valid_alphabet(alphabet_)) {
    fail(ErrorCode::InvalidLanguage, "alphabet must be nonempty with distinct symbols");
  }
  if (transitions_.size() != states_ * alphabet_.size()) {
    fail(ErrorCode::InvalidLanguage, "transition table has the wrong size");
  }
  for (std::size_t t : transitions_) {
    if (t != kMissing && t >= states_) fail(ErrorCode::InvalidLanguage, "transition target out of range");
  }
  if (start_ >= states_) fail(ErrorCode::InvalidLanguage, "start state out of range");
  std::sort(accepting_.begin(), accepting_.end());
  accepting_.erase(std::unique(accepting_.begin(), accepting_.end()), accepting_.end());
  for (std::size_t q : accepting_) {
    if (q >= states_) fail(ErrorCode::InvalidLanguage, "accepting state out of range");
    accepting_mask_[q] = true;
  }
}

std::size_t Dfa::symbol_index(const Symbol& s) const {
  auto it = std::find(alphabet_.begin(), alphabet_.end(), s);
  if (it == alphabet_.end()) fail(ErrorCode::UnknownSymbol, "symbol '" + s + "' not in alphabet");
  return static_cast<std::size_t>(it - alphabet_.begin());
}

bool Dfa::is_complete() const {
  return std::find(transitions_.begin(), transitions_.end(), kMissing) == transitions_.end();
}

bool Dfa::accepts(const Word& word) const {
  std::size_t q = start_;
  for (const auto& s : word) {
    q = next(q, symbol_index(s));
    if (q == kMissing) return false;
  }
  return is_accepting(q);
}

}  // namespace syntaft
