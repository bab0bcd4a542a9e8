#include "synchrolab/census.hpp"

#include <atomic>
#include <vector>

#include "synchrolab/errors.hpp"
#include "synchrolab/parallel.hpp"
#include "synchrolab/sync.hpp"

namespace synchrolab {

CensusResult census(std::size_t n, std::size_t k, const CensusOptions& options, std::size_t jobs,
                    const CensusCallbacks& callbacks) {
  if (n == 0 || k == 0) throw ValidationError("census: n and k must be positive");
  if (n * k > kMaxCensusSymbols || n > kDenseVisitedLimit) {
    throw ResourceRefusal("census: n*k = " + std::to_string(n * k) + " exceeds " +
                          std::to_string(kMaxCensusSymbols) + "; shard the run or reduce n");
  }
  CanonicalEnumerator probe(n, k, options.shard);
  // Tasks are prefixes three blocks deep: fine enough to balance threads,
  // coarse enough that per-task overhead is negligible.
  const auto tasks = probe.prefixes(std::min(n * k, 3 * k));

  struct Partial {
    Histogram thresholds;
    std::uint64_t strings = 0;
    std::uint64_t not_synchronizing = 0;
  };
  std::vector<Partial> partials(tasks.size());
  std::atomic<std::size_t> finished{0};

  parallel_for(tasks.size(), jobs, [&](std::size_t t) {
    static thread_local ThresholdSearch search;
    CanonicalEnumerator enumerator(n, k, options.shard);
    Partial local;
    enumerator.run(tasks[t], [&](std::span<const std::uint8_t> table) {
      ++local.strings;
      const auto rt = search.run(table, n, k);
      if (!rt) {
        ++local.not_synchronizing;
        return;
      }
      if (*rt < options.min_threshold) return;
      if (options.dedup_iso && !is_iso_self_canonical(table, n, k)) return;
      local.thresholds.add(*rt);
      if (callbacks.on_counted) callbacks.on_counted(table, *rt);
    });
    partials[t] = std::move(local);
    const std::size_t done = ++finished;
    if (callbacks.on_progress) callbacks.on_progress(done, tasks.size());
  });

  CensusResult result{n, k, options, {}, 0, 0};
  for (const auto& part : partials) {
    result.thresholds.merge(part.thresholds);
    result.strings += part.strings;
    result.not_synchronizing += part.not_synchronizing;
  }
  return result;
}

}  // namespace synchrolab
