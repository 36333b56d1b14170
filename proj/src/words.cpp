#include "serialcob/words.hpp"

#include "serialcob/errors.hpp"

namespace serialcob {

std::optional<std::size_t> Alphabet::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < letters.size(); ++i)
    if (letters[i] == name) return i;
  return std::nullopt;
}

bool lenlex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.letters < b.letters;
}

Word concat(const Word& u, const Word& v) {
  Word w = u;
  w.letters.insert(w.letters.end(), v.letters.begin(), v.letters.end());
  return w;
}

Word reverse(const Word& w) {
  Word r = w;
  std::reverse(r.letters.begin(), r.letters.end());
  return r;
}

Word rotate_left(const Word& w, std::size_t k) {
  Word r;
  r.letters.reserve(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) r.letters.push_back(w.letters[(i + k) % w.size()]);
  return r;
}

CyclicWord cyclic_normalize(const Word& w) {
  if (w.empty()) return {w};
  Word best = w;
  for (std::size_t k = 1; k < w.size(); ++k) {
    Word rot = rotate_left(w, k);
    if (lenlex_less(rot, best)) best = rot;
  }
  return {best};
}

std::vector<Word> words_of_length(std::size_t r, std::size_t len) {
  std::vector<Word> out;
  if (len == 0) {
    out.push_back({});
    return out;
  }
  if (r == 0) return out;
  Word w;
  w.letters.assign(len, 0);
  while (true) {
    out.push_back(w);
    std::size_t i = len;
    while (i > 0 && w.letters[i - 1] == r - 1) w.letters[--i] = 0;
    if (i == 0) break;
    ++w.letters[i - 1];
  }
  return out;
}

std::vector<Word> words_up_to(std::size_t r, std::size_t max_len) {
  std::vector<Word> out;
  for (std::size_t len = 0; len <= max_len; ++len) {
    auto level = words_of_length(r, len);
    if (level.empty()) break;
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

Word parse_word(const std::string& text, const Alphabet& alphabet) {
  if (text.empty()) throw ValidationError("empty word literal; write 'e' for the empty word");
  if (text == "e") return {};
  Word w;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t dot = text.find('.', start);
    std::string name = text.substr(start, dot == std::string::npos ? dot : dot - start);
    auto idx = alphabet.index_of(name);
    if (!idx) throw ValidationError("unknown letter '" + name + "' in word '" + text + "'");
    w.letters.push_back(static_cast<std::uint32_t>(*idx));
    if (dot == std::string::npos) break;
    start = dot + 1;
  }
  return w;
}

std::string word_to_string(const Word& w, const Alphabet& alphabet) {
  if (w.empty()) return "e";
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += '.';
    s += alphabet.letters[w.letters[i]];
  }
  return s;
}

}  // namespace serialcob
