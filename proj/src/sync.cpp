#include "synchrolab/sync.hpp"

#include <algorithm>
#include <unordered_set>

#include "synchrolab/errors.hpp"

namespace synchrolab {
namespace {

// Index of the unordered pair {p, q}, p < q, in row-major upper-triangle order.
std::size_t pair_index(std::size_t n, State p, State q) {
  if (p > q) std::swap(p, q);
  return p * (2 * n - p - 1) / 2 + (q - p - 1);
}

struct QueueEntry {
  std::uint64_t set;
  std::uint32_t parent;
  Letter letter;
};

class VisitedSet {
 public:
  explicit VisitedSet(std::size_t n) {
    if (n <= kDenseVisitedLimit) dense_.assign(std::size_t{1} << n, false);
  }
  // Returns true if the set was not seen before.
  bool insert(std::uint64_t bits) {
    if (!dense_.empty()) {
      if (dense_[bits]) return false;
      dense_[bits] = true;
      return true;
    }
    return sparse_.insert(bits).second;
  }

 private:
  std::vector<bool> dense_;
  std::unordered_set<std::uint64_t> sparse_;
};

Word trace_back(const std::vector<QueueEntry>& queue, std::uint32_t index, Letter last) {
  std::vector<Letter> letters{last};
  while (index != 0) {
    letters.push_back(queue[index].letter);
    index = queue[index].parent;
  }
  std::reverse(letters.begin(), letters.end());
  return Word(std::move(letters));
}

}  // namespace

bool is_synchronizing(const Dfa& dfa) {
  const std::size_t n = dfa.states();
  if (n == 1) return true;
  const std::size_t pairs = n * (n - 1) / 2;

  // Reverse edges of the pair automaton in CSR form.
  std::vector<std::uint32_t> degree(pairs + 1, 0);
  std::vector<char> merged(pairs, 0);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  edges.reserve(pairs * dfa.letters());
  for (State p = 0; p < n; ++p) {
    for (State q = p + 1; q < n; ++q) {
      const auto from = static_cast<std::uint32_t>(pair_index(n, p, q));
      for (Letter a = 0; a < dfa.letters(); ++a) {
        const State p2 = dfa.next(p, a);
        const State q2 = dfa.next(q, a);
        if (p2 == q2) {
          merged[from] = 1;
        } else {
          const auto to = static_cast<std::uint32_t>(pair_index(n, p2, q2));
          edges.emplace_back(to, from);
          ++degree[to + 1];
        }
      }
    }
  }
  for (std::size_t i = 0; i < pairs; ++i) degree[i + 1] += degree[i];
  std::vector<std::uint32_t> preds(edges.size());
  std::vector<std::uint32_t> fill(degree.begin(), degree.end() - 1);
  for (const auto& [to, from] : edges) preds[fill[to]++] = from;

  std::vector<std::uint32_t> stack;
  std::size_t good = 0;
  for (std::uint32_t i = 0; i < pairs; ++i) {
    if (merged[i]) {
      stack.push_back(i);
      ++good;
    }
  }
  while (!stack.empty()) {
    const std::uint32_t cur = stack.back();
    stack.pop_back();
    for (std::uint32_t e = degree[cur]; e < degree[cur + 1]; ++e) {
      const std::uint32_t prev = preds[e];
      if (!merged[prev]) {
        merged[prev] = 1;
        ++good;
        stack.push_back(prev);
      }
    }
  }
  return good == pairs;
}

ResetResult reset_threshold(const Dfa& dfa, std::optional<std::size_t> cap) {
  ResetResult result;
  const StateSet full = dfa.all_states();
  if (full.is_singleton()) {
    result.status = ResetStatus::kSynchronizing;
    return result;
  }
  if (!is_synchronizing(dfa)) return result;

  VisitedSet visited(dfa.states());
  std::vector<QueueEntry> queue{{full.bits(), 0, 0}};
  visited.insert(full.bits());
  std::size_t level_begin = 0;
  for (std::size_t depth = 0;; ++depth) {
    if (cap && depth + 1 > *cap) {
      result.status = ResetStatus::kCapExceeded;
      return result;
    }
    const std::size_t level_end = queue.size();
    for (std::size_t i = level_begin; i < level_end; ++i) {
      const StateSet current = StateSet::from_bits(queue[i].set);
      for (Letter a = 0; a < dfa.letters(); ++a) {
        const StateSet next = image_unchecked(dfa, current, a);
        if (next.is_singleton()) {
          result.status = ResetStatus::kSynchronizing;
          result.threshold = depth + 1;
          result.witness = trace_back(queue, static_cast<std::uint32_t>(i), a);
          return result;
        }
        if (visited.insert(next.bits())) {
          queue.push_back({next.bits(), static_cast<std::uint32_t>(i), a});
        }
      }
    }
    // The pair test guarantees a singleton is reachable.
    if (level_end == queue.size()) throw std::logic_error("reset_threshold: search exhausted");
    level_begin = level_end;
  }
}

StateSet reset_target_states(const Dfa& dfa) {
  const ResetResult r = reset_threshold(dfa);
  if (r.status != ResetStatus::kSynchronizing) {
    throw NotSynchronizingError("reset_target_states: automaton is not synchronizing");
  }
  // Any reset target reaches every other one: if Q.w = {p} and Q.u = {p'},
  // then p.u = p'. So the targets are exactly the states reachable from one.
  const StateSet target = image(dfa, dfa.all_states(), r.witness);
  return reachable_from(dfa, target);
}

std::optional<std::size_t> ThresholdSearch::run(std::span<const std::uint8_t> table, std::size_t n,
                                                std::size_t k) {
  if (n > kDenseVisitedLimit) throw ValidationError("ThresholdSearch: too many states");
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  if (n == 1) return 0;
  const std::size_t space = std::size_t{1} << n;
  if (stamp_.size() < space) {
    stamp_.assign(space, 0);
    queue_.resize(space);
    generation_ = 0;
  }
  if (++generation_ == 0) {
    std::fill(stamp_.begin(), stamp_.end(), 0);
    generation_ = 1;
  }

  std::size_t head = 0;
  std::size_t tail = 0;
  queue_[tail++] = full;
  stamp_[full] = generation_;
  for (std::size_t depth = 1;; ++depth) {
    const std::size_t level_end = tail;
    if (head == level_end) return std::nullopt;
    for (; head < level_end; ++head) {
      const std::uint64_t current = queue_[head];
      for (std::size_t a = 0; a < k; ++a) {
        std::uint64_t next = 0;
        for (std::uint64_t rest = current; rest != 0; rest &= rest - 1) {
          const auto q = static_cast<std::size_t>(std::countr_zero(rest));
          next |= std::uint64_t{1} << table[q * k + a];
        }
        if ((next & (next - 1)) == 0) return depth;
        if (stamp_[next] != generation_) {
          stamp_[next] = generation_;
          queue_[tail++] = next;
        }
      }
    }
  }
}

}  // namespace synchrolab
