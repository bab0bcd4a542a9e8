#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "synchrolab/dfa.hpp"
#include "synchrolab/histogram.hpp"

namespace synchrolab {

// Directed graph on vertices 0..n-1, loops allowed, no multiple edges.
// Row v is the bitmask of out-neighbours of v.
class Digraph {
 public:
  static constexpr std::size_t kMaxVertices = 64;

  explicit Digraph(std::size_t vertices);
  static Digraph from_rows(std::vector<std::uint64_t> rows);
  static Digraph identity(std::size_t vertices);
  static Digraph complete(std::size_t vertices);

  std::size_t vertices() const { return rows_.size(); }
  std::uint64_t row(std::size_t v) const { return rows_[v]; }
  const std::vector<std::uint64_t>& rows() const { return rows_; }

  bool has_edge(std::size_t from, std::size_t to) const { return ((rows_[from] >> to) & 1U) != 0; }
  void add_edge(std::size_t from, std::size_t to);

  std::size_t edge_count() const;
  std::size_t out_degree(std::size_t v) const;
  bool is_complete() const;

  bool operator==(const Digraph&) const = default;

 private:
  std::vector<std::uint64_t> rows_;
};

Digraph underlying_digraph(const Dfa& dfa);

bool is_strongly_connected(const Digraph& d);

// gcd of cycle lengths of a strongly connected digraph; 0 if it has no edges.
std::size_t period(const Digraph& d);

bool is_primitive(const Digraph& d);

// Edge (u, w) iff some v has (u, v) in first and (v, w) in second.
Digraph compose(const Digraph& first, const Digraph& second);

// Walks of length exactly t; t = 0 is the identity relation.
Digraph power(const Digraph& d, std::size_t t);

// Least t with power(d, t) complete, or nullopt if d is not primitive.
std::optional<std::size_t> exponent(const Digraph& d);

// Extremal digraph families (1-indexed edges, stored 0-indexed):
//   W  = chain (i, i+1) + (n, 1) + (n, 2)
//   D  = W + (n-1, 1)
//   V  = chain + (n, 1) + (n, 3)
//   R  = V + (n-1, 2)
//   G  = V + (n-2, 1)
//   G' = V + (n-2, 1) + (n-1, 2)
enum class DigraphSeries { kW, kD, kV, kR, kG, kGPrime };

DigraphSeries parse_digraph_series(std::string_view name);
std::string_view digraph_series_name(DigraphSeries series);
Digraph digraph_series(DigraphSeries series, std::size_t n);

// Every automaton over k letters whose underlying digraph is d: at each
// vertex the letters are split onto the out-edges, each edge getting at
// least one letter. With dedup, one automaton per isomorphism class (states
// and letters both renamed).
struct Colorings {
  std::vector<Dfa> automata;
  std::string diagnostic;  // non-empty when no coloring exists
};
Colorings colorings(const Digraph& d, std::size_t letters, bool dedup);

// Row-major incidence matrix as an n*n bit string, first character is the
// most significant bit.
std::uint64_t digraph_code(const Digraph& d);
Digraph digraph_from_code(std::size_t n, std::uint64_t code);
std::string code_to_bitstring(std::size_t n, std::uint64_t code);

inline constexpr std::size_t kMaxCanonicalVertices = 8;

// Least digraph_code over all vertex permutations. n <= 8.
std::uint64_t digraph_iso_canonical(const Digraph& d);

struct DigraphCensusOptions {
  bool primitive_only = true;
  bool dedup_iso = true;
};

struct DigraphCensus {
  Histogram exponents;           // exponent -> number of digraphs / classes
  std::uint64_t not_primitive = 0;  // tallied only when primitive_only is off
};

inline constexpr std::size_t kMaxDigraphCensusVertices = 5;

// Census over the codes [begin, end) of n-vertex digraphs.
DigraphCensus digraph_census_range(std::size_t n, std::uint64_t begin, std::uint64_t end,
                                   const DigraphCensusOptions& options);

// Whole census split into `jobs` contiguous ranges. Throws ResourceRefusal
// for n > kMaxDigraphCensusVertices.
DigraphCensus digraph_census(std::size_t n, const DigraphCensusOptions& options, std::size_t jobs = 1);

// Text format: "n" then n rows of n '0'/'1' characters.
Digraph parse_digraph(std::string_view text);
std::string serialize_digraph(const Digraph& d);

}  // namespace synchrolab
