#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "synchrolab/state_set.hpp"
#include "synchrolab/word.hpp"

namespace synchrolab {

// Complete deterministic automaton with states 0..n-1 and letters 0..k-1.
// The transition table is row-major: entry q*k + a holds delta(q, a).
// Immutable once built.
class Dfa {
 public:
  static constexpr std::size_t kMaxStates = StateSet::kCapacity;

  // Throws ValidationError unless 1 <= n <= kMaxStates, k >= 1, the table
  // holds exactly n*k entries and every entry is a state.
  Dfa(std::size_t states, std::size_t letters, std::span<const State> table);
  Dfa(std::size_t states, std::size_t letters, std::initializer_list<State> table)
      : Dfa(states, letters, std::span<const State>(table.begin(), table.size())) {}

  // One column per letter: columns[a][q] = delta(q, a).
  static Dfa from_columns(const std::vector<std::vector<State>>& columns);

  std::size_t states() const { return states_; }
  std::size_t letters() const { return letters_; }

  // Unchecked single transition.
  State next(State q, Letter a) const { return table_[q * letters_ + a]; }

  std::span<const std::uint8_t> table() const { return table_; }
  StateSet all_states() const { return StateSet::full(states_); }

  bool operator==(const Dfa&) const = default;

 private:
  std::size_t states_ = 0;
  std::size_t letters_ = 0;
  std::vector<std::uint8_t> table_;
};

// Left-to-right action of w on q. Throws ValidationError on a state or
// letter outside the automaton.
State apply(const Dfa& dfa, State q, const Word& w);

// { apply(dfa, q, w) : q in s }.
StateSet image(const Dfa& dfa, StateSet s, const Word& w);

// Image of s under a single letter; no range checks.
inline StateSet image_unchecked(const Dfa& dfa, StateSet s, Letter a) {
  std::uint64_t out = 0;
  for (State q : s) out |= std::uint64_t{1} << dfa.next(q, a);
  return StateSet::from_bits(out);
}

bool is_permutation_letter(const Dfa& dfa, Letter a);

// States reachable from the given set under all words.
StateSet reachable_from(const Dfa& dfa, StateSet from);

bool is_strongly_connected(const Dfa& dfa);

// Restriction to a set closed under every letter. Member states keep their
// relative order and are renumbered 0..|states|-1. Throws ValidationError if
// the set is empty or not closed.
Dfa subautomaton(const Dfa& dfa, StateSet states);

// Same automaton with letters renamed: letter i of the result acts as
// letter order[i] of dfa.
Dfa permute_letters(const Dfa& dfa, std::span<const Letter> order);

// Text format: "n k" then n rows of k targets.
Dfa parse_dfa(std::string_view text);
std::string serialize_dfa(const Dfa& dfa);

}  // namespace synchrolab
