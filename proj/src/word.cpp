#include "synchrolab/word.hpp"

#include "synchrolab/errors.hpp"

namespace synchrolab {

Word Word::parse(std::string_view text) {
  Word w;
  w.letters_.reserve(text.size());
  for (char c : text) {
    if (c < 'a' || c > 'z') {
      throw ValidationError("word: unexpected character '" + std::string(1, c) + "'");
    }
    w.letters_.push_back(static_cast<Letter>(c - 'a'));
  }
  return w;
}

Word& Word::operator+=(const Word& tail) {
  letters_.insert(letters_.end(), tail.letters_.begin(), tail.letters_.end());
  return *this;
}

Word Word::repeat(std::size_t count) const {
  Word out;
  out.letters_.reserve(letters_.size() * count);
  for (std::size_t i = 0; i < count; ++i) out += *this;
  return out;
}

std::string Word::to_string() const {
  std::string s;
  s.reserve(letters_.size());
  for (Letter a : letters_) {
    if (a >= 26) throw ValidationError("word: letter index too large to print");
    s.push_back(static_cast<char>('a' + a));
  }
  return s;
}

}  // namespace synchrolab
