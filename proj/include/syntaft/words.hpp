#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace syntaft {

using Symbol = std::string;
using Word = std::vector<Symbol>;

/// All words over `alphabet` of length <= max_length, shortlex order.
std::vector<Word> words_up_to(const std::vector<Symbol>& alphabet, std::size_t max_length);

/// Symbols concatenated when every symbol is one character, otherwise
/// space-separated. The empty word prints as "".
std::string word_to_string(const Word& word);

/// Splits on whitespace when present; otherwise greedy longest match against
/// `alphabet`. Unknown text raises UnknownSymbol.
Word parse_word(std::string_view text, const std::vector<Symbol>& alphabet);

/// True when the symbols are pairwise distinct, nonempty and whitespace-free.
bool is_valid_alphabet(const std::vector<Symbol>& alphabet);

}  // namespace syntaft
