#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "synchrolab/dfa.hpp"
#include "synchrolab/word.hpp"

namespace synchrolab {

// Automaton on the same states whose letter i acts as actions[i] does in dfa.
Dfa derive(const Dfa& dfa, const std::vector<Word>& actions);

// For a two-letter automaton where a fixes all states but one and b
// permutes the states: the automaton with letters b and c = ab can be reset
// in at most rt(dfa) - n + 2 steps.
struct IdempotentBoundReport {
  bool applicable = false;
  std::optional<std::size_t> threshold;          // rt(dfa)
  std::optional<std::size_t> derived_threshold;  // rt(derive(dfa, [b, ab]))
  // The derived automaton synchronizes and derived_threshold <= threshold - n + 2.
  // False when the derived automaton does not synchronize.
  bool holds = false;
};

IdempotentBoundReport check_simple_idempotent_bound(const Dfa& dfa);

// Largest integer not of the form x*p + y*q with x, y >= 0, i.e. p*q - p - q.
// Requires coprime p, q >= 2.
long long frobenius(long long p, long long q);

// Whether x = alpha*p + beta*q for some non-negative alpha, beta.
bool representable(long long x, long long p, long long q);

}  // namespace synchrolab
