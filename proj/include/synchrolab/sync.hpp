#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "synchrolab/dfa.hpp"

namespace synchrolab {

// Pair-automaton test: every pair of states can be merged by some word.
bool is_synchronizing(const Dfa& dfa);

enum class ResetStatus { kSynchronizing, kNotSynchronizing, kCapExceeded };

struct ResetResult {
  ResetStatus status = ResetStatus::kNotSynchronizing;
  std::size_t threshold = 0;  // meaningful only for kSynchronizing
  Word witness;               // shortest reset word, lexicographically least
};

// Exact reset threshold by breadth-first search over images of the full
// state set. `cap` bounds the search depth: a threshold larger than `cap`
// is reported as kCapExceeded. Subsets are tracked in a dense table up to
// kDenseVisitedLimit states and in a hash set above; memory grows with the
// number of reachable subsets, so use `cap` on large automata.
ResetResult reset_threshold(const Dfa& dfa, std::optional<std::size_t> cap = std::nullopt);

inline constexpr std::size_t kDenseVisitedLimit = 20;

// States onto which the whole automaton can be reset. Throws
// NotSynchronizingError if there are none.
StateSet reset_target_states(const Dfa& dfa);

// Threshold-only search for tight loops over many small automata. Keeps its
// buffers between calls; one instance per thread.
class ThresholdSearch {
 public:
  // `table` is a row-major transition table on n <= kDenseVisitedLimit
  // states. Returns nullopt for a non-synchronizing automaton.
  std::optional<std::size_t> run(std::span<const std::uint8_t> table, std::size_t n, std::size_t k);

 private:
  std::vector<std::uint32_t> stamp_;
  std::vector<std::uint64_t> queue_;
  std::uint32_t generation_ = 0;
};

}  // namespace synchrolab
