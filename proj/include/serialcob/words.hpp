#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace serialcob {

struct Alphabet {
  std::vector<std::string> letters;  // unique names; order fixes length-lex

  std::size_t size() const { return letters.size(); }
  std::optional<std::size_t> index_of(const std::string& name) const;
  bool operator==(const Alphabet&) const = default;
};

struct Word {
  std::vector<std::uint32_t> letters;  // indices into an Alphabet

  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }
  auto operator<=>(const Word&) const = default;
};

// Length first, then lexicographic on letter indices.
bool lenlex_less(const Word& a, const Word& b);

Word concat(const Word& u, const Word& v);
Word reverse(const Word& w);

struct CyclicWord {
  Word representative;  // length-lex minimal rotation
  auto operator<=>(const CyclicWord&) const = default;
};

CyclicWord cyclic_normalize(const Word& w);
Word rotate_left(const Word& w, std::size_t k);

// All words over r letters of length exactly len, lexicographic order.
std::vector<Word> words_of_length(std::size_t r, std::size_t len);
// All words of length <= max_len, length-lex order.
std::vector<Word> words_up_to(std::size_t r, std::size_t max_len);

// CLI syntax: letters joined by '.', empty word spelled "e".
Word parse_word(const std::string& text, const Alphabet& alphabet);
std::string word_to_string(const Word& w, const Alphabet& alphabet);

}  // namespace serialcob
