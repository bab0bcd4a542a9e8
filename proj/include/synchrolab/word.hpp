#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "synchrolab/state_set.hpp"

namespace synchrolab {

// A finite word over letters 0..k-1. Letter ranges are checked when the
// word is applied to an automaton, not at construction.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}

  // Parses "abba" style text: 'a' is letter 0, 'b' letter 1 and so on.
  static Word parse(std::string_view text);

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  const std::vector<Letter>& letters() const { return letters_; }

  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  void push_back(Letter a) { letters_.push_back(a); }
  Word& operator+=(const Word& tail);
  friend Word operator+(Word head, const Word& tail) { return head += tail; }

  // w^count; count = 0 gives the empty word.
  Word repeat(std::size_t count) const;

  // Letters rendered as a, b, c, ...; the empty word renders as "".
  std::string to_string() const;

  bool operator==(const Word&) const = default;

 private:
  std::vector<Letter> letters_;
};

}  // namespace synchrolab
