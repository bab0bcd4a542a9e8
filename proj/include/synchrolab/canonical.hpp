#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "synchrolab/dfa.hpp"
#include "synchrolab/errors.hpp"

namespace synchrolab {

// BFS encoding of an initially-connected automaton: block q (k symbols)
// lists the targets of state q, states numbered in order of discovery from
// state 0 with letters taken in a fixed order. Equivalently the row-major
// transition table of the renumbered automaton.
struct CanonicalString {
  std::size_t states = 0;
  std::size_t letters = 0;
  std::vector<State> symbols;

  // "[1,2,0,2,3,0,3,0,2,1,3,2]"
  std::string to_string() const;
  // Parses the bracketed form; the caller supplies n and k. Checks length
  // and symbol range only, not (R1)/(R2).
  static CanonicalString parse(std::string_view text, std::size_t states, std::size_t letters);

  bool operator==(const CanonicalString&) const = default;
  // Lexicographic on symbols for equal (n, k).
  auto operator<=>(const CanonicalString&) const = default;
};

// Checks
//   (R1) every s_i > 1 is preceded by some s_j = s_i - 1, and
//   (R2) every 1 <= m < n occurs at some position j < m*k.
// Throws ValidationError if the length is not n*k or a symbol is >= n.
bool validate_canonical(const CanonicalString& s);

Dfa dfa_from_canonical(const CanonicalString& s);

// Renumbers dfa by BFS from `start`, visiting letters in `letter_order`.
// Throws ValidationError naming a state that `start` does not reach.
CanonicalString canonical_from_dfa(const Dfa& dfa, State start, std::span<const Letter> letter_order);
CanonicalString canonical_from_dfa(const Dfa& dfa, State start = 0);

// Least canonical string over every start state that reaches all states and
// every ordering of the letters. Two automata get the same form iff they are
// isomorphic up to renaming states and letters. Throws ValidationError if no
// state reaches all others.
CanonicalString iso_canonical_form(const Dfa& dfa);

// Whether a canonical string (as a raw table) is the iso_canonical_form of
// its own automaton; bails out at the first smaller encoding.
bool is_iso_self_canonical(std::span<const std::uint8_t> symbols, std::size_t n, std::size_t k);

struct Shard {
  std::size_t index = 0;
  std::size_t count = 1;
};

// Parses "i/m".
Shard parse_shard(std::string_view text);

// Number of leading symbols that make up the shard key: the first two
// blocks (one block when n = 1).
inline std::size_t shard_key_length(std::size_t n, std::size_t k) { return std::min<std::size_t>(n, 2) * k; }

// Depth-first generator of valid canonical strings, extending a prefix one
// symbol at a time and pruning as soon as (R1) fails or (R2) becomes
// unsatisfiable. Strings whose shard key (the key symbols read as a base-n
// number) is not congruent to shard.index mod shard.count are skipped.
class CanonicalEnumerator {
 public:
  CanonicalEnumerator(std::size_t n, std::size_t k, Shard shard = {});

  std::size_t states() const { return n_; }
  std::size_t letters() const { return k_; }

  // Visits every valid string of this shard starting with `prefix`, in
  // lexicographic order. visit receives the full symbol table.
  template <class Visit>
  void run(std::span<const std::uint8_t> prefix, Visit&& visit) {
    unsigned max_seen = 0;
    if (!accept_prefix(prefix, max_seen)) return;
    std::copy(prefix.begin(), prefix.end(), symbols_.begin());
    descend(prefix.size(), max_seen, visit);
  }
  template <class Visit>
  void run(Visit&& visit) {
    run(std::span<const std::uint8_t>(), std::forward<Visit>(visit));
  }

  // All live prefixes of the given length (clamped to n*k), in order.
  std::vector<std::vector<std::uint8_t>> prefixes(std::size_t length);

 private:
  bool accept_prefix(std::span<const std::uint8_t> prefix, unsigned& max_seen) const;
  bool in_shard() const;

  template <class Visit>
  void descend(std::size_t pos, unsigned max_seen, Visit& visit) {
    const std::size_t total = n_ * k_;
    if (pos == total) {
      visit(std::span<const std::uint8_t>(symbols_.data(), total));
      return;
    }
    const unsigned top = std::min<unsigned>(max_seen + 1, static_cast<unsigned>(n_ - 1));
    for (unsigned s = 0; s <= top; ++s) {
      const unsigned seen = std::max(max_seen, s);
      // (R2): the next undiscovered state must still fit before its deadline.
      if (seen + 1 < n_ && pos + 1 >= (seen + 1) * k_) continue;
      symbols_[pos] = static_cast<std::uint8_t>(s);
      if (pos + 1 == key_length_ && shard_.count > 1 && !in_shard()) continue;
      descend(pos + 1, seen, visit);
    }
  }

  std::size_t n_;
  std::size_t k_;
  Shard shard_;
  std::size_t key_length_;
  std::vector<std::uint8_t> symbols_;
};

// Number of valid canonical strings in a shard.
std::uint64_t count_canonical(std::size_t n, std::size_t k, Shard shard = {}, std::size_t jobs = 1);

}  // namespace synchrolab
