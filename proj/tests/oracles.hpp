#pragma once

// Brute-force reference implementations. They share nothing with the
// library's algorithms beyond Dfa::next, and are only fast enough for tiny
// inputs.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "synchrolab/dfa.hpp"
#include "synchrolab/histogram.hpp"

namespace oracle {

using Table = std::vector<int>;  // row-major: table[q * k + a]

inline std::uint64_t step(const Table& t, int k, std::uint64_t set, int a) {
  std::uint64_t out = 0;
  for (int q = 0; q < 64; ++q) {
    if ((set >> q) & 1U) out |= std::uint64_t{1} << t[q * k + a];
  }
  return out;
}

// Subset BFS with an ordered set; nullopt when not synchronizing.
inline std::optional<std::size_t> reset_threshold(const Table& t, int n, int k) {
  const std::uint64_t full = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  std::map<std::uint64_t, std::size_t> dist{{full, 0}};
  std::deque<std::uint64_t> queue{full};
  while (!queue.empty()) {
    const std::uint64_t s = queue.front();
    queue.pop_front();
    if (std::popcount(s) == 1) return dist[s];
    for (int a = 0; a < k; ++a) {
      const std::uint64_t next = step(t, k, s, a);
      if (dist.emplace(next, dist[s] + 1).second) queue.push_back(next);
    }
  }
  return std::nullopt;
}

inline Table table_of(const synchrolab::Dfa& dfa) {
  return Table(dfa.table().begin(), dfa.table().end());
}

// Exhaustive word search: the shortest length L such that some word of
// length L resets the automaton, trying every word up to max_length.
inline std::optional<std::size_t> shortest_reset_by_words(const Table& t, int n, int k, std::size_t max_length) {
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  for (std::size_t length = 0; length <= max_length; ++length) {
    std::vector<int> word(length, 0);
    while (true) {
      std::uint64_t s = full;
      for (int a : word) s = step(t, k, s, a);
      if (std::popcount(s) == 1) return length;
      std::size_t i = 0;
      while (i < length && word[i] == k - 1) word[i++] = 0;
      if (i == length) break;
      ++word[i];
    }
  }
  return std::nullopt;
}

inline bool reaches_all(const Table& t, int n, int k, int start) {
  std::vector<bool> seen(n, false);
  std::vector<int> stack{start};
  seen[start] = true;
  while (!stack.empty()) {
    const int q = stack.back();
    stack.pop_back();
    for (int a = 0; a < k; ++a) {
      const int r = t[q * k + a];
      if (!seen[r]) {
        seen[r] = true;
        stack.push_back(r);
      }
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

// A table is a canonical string iff every state is reachable from 0 and
// BFS numbering (letters in order) leaves the table unchanged.
inline bool is_bfs_canonical(const Table& t, int n, int k) {
  if (!reaches_all(t, n, k, 0)) return false;
  std::vector<int> number(n, -1);
  number[0] = 0;
  int next = 1;
  for (int q = 0; q < next; ++q) {
    for (int a = 0; a < k; ++a) {
      const int r = t[q * k + a];
      if (number[r] < 0) number[r] = next++;
    }
  }
  for (int q = 0; q < n; ++q) {
    if (number[q] != q) return false;
  }
  return true;
}

template <class Visit>
void for_each_table(int n, int k, Visit&& visit) {
  Table t(static_cast<std::size_t>(n * k), 0);
  while (true) {
    visit(t);
    std::size_t i = 0;
    while (i < t.size() && t[i] == n - 1) t[i++] = 0;
    if (i == t.size()) return;
    ++t[i];
  }
}

inline std::uint64_t count_canonical(int n, int k) {
  std::uint64_t count = 0;
  for_each_table(n, k, [&](const Table& t) { count += is_bfs_canonical(t, n, k) ? 1 : 0; });
  return count;
}

// Least relabelling of the table over all state and letter permutations.
inline Table iso_key(const Table& t, int n, int k) {
  std::vector<int> states(n);
  std::iota(states.begin(), states.end(), 0);
  std::vector<int> letters(k);
  Table best;
  do {
    std::iota(letters.begin(), letters.end(), 0);
    do {
      // state q is renamed states[q]; new letter b is old letter letters[b]
      Table image(t.size());
      for (int q = 0; q < n; ++q) {
        for (int b = 0; b < k; ++b) image[states[q] * k + b] = states[t[q * k + letters[b]]];
      }
      if (best.empty() || image < best) best = image;
    } while (std::next_permutation(letters.begin(), letters.end()));
  } while (std::next_permutation(states.begin(), states.end()));
  return best;
}

// Reset-threshold histogram over isomorphism classes (state and letter
// renaming) of automata in which some state reaches every state.
inline synchrolab::Histogram census(int n, int k, std::size_t min_threshold = 0) {
  std::set<Table> classes;
  for_each_table(n, k, [&](const Table& t) {
    for (int s = 0; s < n; ++s) {
      if (reaches_all(t, n, k, s)) {
        classes.insert(iso_key(t, n, k));
        return;
      }
    }
  });
  synchrolab::Histogram h;
  for (const Table& t : classes) {
    const auto rt = reset_threshold(t, n, k);
    if (rt && *rt >= min_threshold) h.add(*rt);
  }
  return h;
}

using Matrix = std::vector<std::vector<bool>>;

inline Matrix multiply(const Matrix& x, const Matrix& y) {
  const std::size_t n = x.size();
  Matrix z(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t l = 0; l < n && !z[i][j]; ++l) z[i][j] = x[i][l] && y[l][j];
    }
  }
  return z;
}

// Least t with A^t all ones, searching up to the given bound.
inline std::optional<std::size_t> exponent(const Matrix& a, std::size_t bound) {
  Matrix p = a;
  for (std::size_t t = 1; t <= bound; ++t) {
    bool all = true;
    for (const auto& row : p) all = all && std::all_of(row.begin(), row.end(), [](bool b) { return b; });
    if (all) return t;
    p = multiply(p, a);
  }
  return std::nullopt;
}

}  // namespace oracle
