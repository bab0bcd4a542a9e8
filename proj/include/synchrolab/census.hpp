#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>

#include "synchrolab/canonical.hpp"
#include "synchrolab/histogram.hpp"

namespace synchrolab {

struct CensusOptions {
  std::size_t min_threshold = 0;  // only record thresholds >= this
  Shard shard;
  bool dedup_iso = true;  // count isomorphism classes, not canonical strings
};

struct CensusResult {
  std::size_t states = 0;
  std::size_t letters = 0;
  CensusOptions options;
  Histogram thresholds;                 // reset threshold -> count
  std::uint64_t strings = 0;            // canonical strings visited
  std::uint64_t not_synchronizing = 0;  // among those strings

  // "threshold\tcount" rows, descending, zero rows and rows below the
  // filter omitted.
  std::string to_tsv() const { return thresholds.to_tsv("threshold", options.min_threshold); }
};

// n * k above this is refused (n = 9 with two letters is the largest run).
inline constexpr std::size_t kMaxCensusSymbols = 18;

struct CensusCallbacks {
  // Every counted automaton (canonical table, threshold). Called from
  // worker threads.
  std::function<void(std::span<const std::uint8_t>, std::size_t)> on_counted;
  // (finished tasks, total tasks) after each task. Called from worker threads.
  std::function<void(std::size_t, std::size_t)> on_progress;
};

// Reset-threshold census over every initially-connected automaton with n
// states and k letters in the requested shard. A string is counted only if
// it is its own iso_canonical_form, so each isomorphism class is counted
// once across all shards. Work is split over `jobs` threads; the result does
// not depend on `jobs`. Throws ResourceRefusal above kMaxCensusSymbols.
CensusResult census(std::size_t n, std::size_t k, const CensusOptions& options, std::size_t jobs = 1,
                    const CensusCallbacks& callbacks = {});

}  // namespace synchrolab
