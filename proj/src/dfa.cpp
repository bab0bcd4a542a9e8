#include "synchrolab/dfa.hpp"

#include <sstream>

#include "synchrolab/errors.hpp"

namespace synchrolab {

Dfa::Dfa(std::size_t states, std::size_t letters, std::span<const State> table)
    : states_(states), letters_(letters) {
  if (states == 0 || states > kMaxStates) {
    throw ValidationError("dfa: state count must be in [1, " + std::to_string(kMaxStates) + "]");
  }
  if (letters == 0) throw ValidationError("dfa: letter count must be positive");
  if (table.size() != states * letters) {
    throw ValidationError("dfa: expected " + std::to_string(states * letters) +
                          " transitions, got " + std::to_string(table.size()));
  }
  table_.reserve(table.size());
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (table[i] >= states) {
      throw ValidationError("dfa: transition (" + std::to_string(i / letters) + ", " +
                            std::to_string(i % letters) + ") -> " + std::to_string(table[i]) +
                            " is out of range");
    }
    table_.push_back(static_cast<std::uint8_t>(table[i]));
  }
}

Dfa Dfa::from_columns(const std::vector<std::vector<State>>& columns) {
  if (columns.empty()) throw ValidationError("dfa: no letters");
  const std::size_t n = columns.front().size();
  std::vector<State> table(n * columns.size());
  for (std::size_t a = 0; a < columns.size(); ++a) {
    if (columns[a].size() != n) throw ValidationError("dfa: ragged letter columns");
    for (std::size_t q = 0; q < n; ++q) table[q * columns.size() + a] = columns[a][q];
  }
  return Dfa(n, columns.size(), table);
}

State apply(const Dfa& dfa, State q, const Word& w) {
  if (q >= dfa.states()) throw ValidationError("apply: state " + std::to_string(q) + " out of range");
  for (Letter a : w) {
    if (a >= dfa.letters()) {
      throw ValidationError("apply: letter " + std::to_string(a) + " out of range");
    }
    q = dfa.next(q, a);
  }
  return q;
}

StateSet image(const Dfa& dfa, StateSet s, const Word& w) {
  if (!s.is_subset_of(dfa.all_states())) throw ValidationError("image: set exceeds state range");
  for (Letter a : w) {
    if (a >= dfa.letters()) {
      throw ValidationError("image: letter " + std::to_string(a) + " out of range");
    }
    s = image_unchecked(dfa, s, a);
  }
  return s;
}

bool is_permutation_letter(const Dfa& dfa, Letter a) {
  if (a >= dfa.letters()) throw ValidationError("letter " + std::to_string(a) + " out of range");
  return image_unchecked(dfa, dfa.all_states(), a) == dfa.all_states();
}

StateSet reachable_from(const Dfa& dfa, StateSet from) {
  StateSet seen = from;
  StateSet frontier = from;
  while (!frontier.empty()) {
    StateSet next;
    for (Letter a = 0; a < dfa.letters(); ++a) next = next | image_unchecked(dfa, frontier, a);
    frontier = StateSet::from_bits(next.bits() & ~seen.bits());
    seen = seen | next;
  }
  return seen;
}

bool is_strongly_connected(const Dfa& dfa) {
  for (State q = 0; q < dfa.states(); ++q) {
    if (reachable_from(dfa, StateSet::singleton(q)) != dfa.all_states()) return false;
  }
  return true;
}

Dfa subautomaton(const Dfa& dfa, StateSet states) {
  if (states.empty() || !states.is_subset_of(dfa.all_states())) {
    throw ValidationError("subautomaton: state set is empty or out of range");
  }
  std::vector<State> rename(dfa.states(), 0);
  State next_id = 0;
  for (State q : states) rename[q] = next_id++;
  std::vector<State> table;
  table.reserve(states.size() * dfa.letters());
  for (State q : states) {
    for (Letter a = 0; a < dfa.letters(); ++a) {
      const State target = dfa.next(q, a);
      if (!states.contains(target)) {
        throw ValidationError("subautomaton: set is not closed (" + std::to_string(q) + " -> " +
                              std::to_string(target) + ")");
      }
      table.push_back(rename[target]);
    }
  }
  return Dfa(states.size(), dfa.letters(), table);
}

Dfa permute_letters(const Dfa& dfa, std::span<const Letter> order) {
  if (order.size() != dfa.letters()) throw ValidationError("permute_letters: wrong order length");
  std::vector<State> table;
  table.reserve(dfa.states() * dfa.letters());
  for (State q = 0; q < dfa.states(); ++q) {
    for (Letter a : order) {
      if (a >= dfa.letters()) throw ValidationError("permute_letters: letter out of range");
      table.push_back(dfa.next(q, a));
    }
  }
  return Dfa(dfa.states(), dfa.letters(), table);
}

Dfa parse_dfa(std::string_view text) {
  std::istringstream in{std::string(text)};
  long long n = 0;
  long long k = 0;
  if (!(in >> n >> k) || n <= 0 || k <= 0) {
    throw ValidationError("dfa file: header must be two positive integers \"n k\"");
  }
  if (static_cast<unsigned long long>(n) > Dfa::kMaxStates) {
    throw ValidationError("dfa file: at most " + std::to_string(Dfa::kMaxStates) + " states supported");
  }
  const auto expected = static_cast<std::size_t>(n * k);
  std::vector<State> table;
  table.reserve(expected);
  long long entry = 0;
  while (in >> entry) {
    if (entry < 0 || entry >= n) {
      throw ValidationError("dfa file: entry " + std::to_string(table.size()) + " = " +
                            std::to_string(entry) + " is out of range");
    }
    table.push_back(static_cast<State>(entry));
  }
  if (!in.eof()) throw ValidationError("dfa file: non-numeric entry");
  if (table.size() != expected) {
    throw ValidationError("dfa file: expected " + std::to_string(expected) + " entries, got " +
                          std::to_string(table.size()));
  }
  return Dfa(static_cast<std::size_t>(n), static_cast<std::size_t>(k), table);
}

std::string serialize_dfa(const Dfa& dfa) {
  std::string out = std::to_string(dfa.states()) + " " + std::to_string(dfa.letters()) + "\n";
  for (State q = 0; q < dfa.states(); ++q) {
    for (Letter a = 0; a < dfa.letters(); ++a) {
      if (a != 0) out += ' ';
      out += std::to_string(dfa.next(q, a));
    }
    out += '\n';
  }
  return out;
}

}  // namespace synchrolab
