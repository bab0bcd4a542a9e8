#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <string>

namespace synchrolab {

// value -> count, iterated in descending value order. Merging is pointwise
// addition, so it is associative and commutative.
class Histogram {
 public:
  void add(std::size_t value, std::uint64_t count = 1) { counts_[value] += count; }
  void merge(const Histogram& other) {
    for (const auto& [value, count] : other.counts_) counts_[value] += count;
  }

  std::uint64_t at(std::size_t value) const {
    auto it = counts_.find(value);
    return it == counts_.end() ? 0 : it->second;
  }
  std::uint64_t total() const {
    std::uint64_t sum = 0;
    for (const auto& entry : counts_) sum += entry.second;
    return sum;
  }
  bool empty() const { return counts_.empty(); }
  // Largest recorded value; 0 when empty.
  std::size_t max_value() const { return counts_.empty() ? 0 : counts_.begin()->first; }

  auto begin() const { return counts_.begin(); }
  auto end() const { return counts_.end(); }

  // "<header>\tcount" followed by one row per non-zero value >= min_value,
  // descending.
  std::string to_tsv(const std::string& header, std::size_t min_value = 0) const {
    std::string out = header + "\tcount\n";
    for (const auto& [value, count] : counts_) {
      if (value < min_value || count == 0) continue;
      out += std::to_string(value) + "\t" + std::to_string(count) + "\n";
    }
    return out;
  }

  bool operator==(const Histogram&) const = default;

 private:
  std::map<std::size_t, std::uint64_t, std::greater<>> counts_;
};

}  // namespace synchrolab
