#include "synchrolab/transforms.hpp"

#include <numeric>

#include "synchrolab/errors.hpp"
#include "synchrolab/sync.hpp"

namespace synchrolab {

Dfa derive(const Dfa& dfa, const std::vector<Word>& actions) {
  if (actions.empty()) throw ValidationError("derive: need at least one action word");
  for (const Word& w : actions) {
    if (w.empty()) throw ValidationError("derive: action words must be non-empty");
  }
  std::vector<std::vector<State>> columns(actions.size(), std::vector<State>(dfa.states()));
  for (std::size_t i = 0; i < actions.size(); ++i) {
    for (State q = 0; q < dfa.states(); ++q) columns[i][q] = apply(dfa, q, actions[i]);
  }
  return Dfa::from_columns(columns);
}

IdempotentBoundReport check_simple_idempotent_bound(const Dfa& dfa) {
  if (dfa.letters() != 2) throw ValidationError("check_simple_idempotent_bound: need a two-letter automaton");
  IdempotentBoundReport report;
  std::size_t moved = 0;
  for (State q = 0; q < dfa.states(); ++q) moved += dfa.next(q, 0) != q ? 1 : 0;
  report.applicable = moved == 1 && is_permutation_letter(dfa, 1);
  if (!report.applicable) return report;

  const ResetResult original = reset_threshold(dfa);
  if (original.status != ResetStatus::kSynchronizing) return report;
  report.threshold = original.threshold;
  const ResetResult derived = reset_threshold(derive(dfa, {Word{1}, Word{0, 1}}));
  if (derived.status != ResetStatus::kSynchronizing) return report;
  report.derived_threshold = derived.threshold;
  // rt(derived) <= rt - n + 2, kept in unsigned arithmetic.
  report.holds = derived.threshold + dfa.states() <= original.threshold + 2;
  return report;
}

long long frobenius(long long p, long long q) {
  if (p < 2 || q < 2) throw ValidationError("frobenius: generators must be at least 2");
  if (std::gcd(p, q) != 1) throw ValidationError("frobenius: generators must be coprime");
  return p * q - p - q;
}

bool representable(long long x, long long p, long long q) {
  if (x < 0) return false;
  if (p < 1 || q < 1) throw ValidationError("representable: generators must be positive");
  for (long long alpha = 0; alpha * p <= x; ++alpha) {
    if ((x - alpha * p) % q == 0) return true;
  }
  return false;
}

}  // namespace synchrolab
