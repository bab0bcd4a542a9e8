#include "synchrolab/digraph.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>
#include <sstream>

#include "synchrolab/canonical.hpp"
#include "synchrolab/errors.hpp"
#include "synchrolab/parallel.hpp"

namespace synchrolab {
namespace {

std::uint64_t bit(std::size_t v) { return std::uint64_t{1} << v; }

std::uint64_t full_mask(std::size_t n) { return n >= 64 ? ~std::uint64_t{0} : bit(n) - 1; }

std::uint64_t forward_closure(const std::vector<std::uint64_t>& rows, std::uint64_t from) {
  std::uint64_t seen = from;
  std::uint64_t frontier = from;
  while (frontier != 0) {
    std::uint64_t next = 0;
    for (std::uint64_t rest = frontier; rest != 0; rest &= rest - 1) next |= rows[std::countr_zero(rest)];
    frontier = next & ~seen;
    seen |= next;
  }
  return seen;
}

std::vector<std::uint64_t> transpose(const std::vector<std::uint64_t>& rows) {
  std::vector<std::uint64_t> out(rows.size(), 0);
  for (std::size_t u = 0; u < rows.size(); ++u) {
    for (std::uint64_t rest = rows[u]; rest != 0; rest &= rest - 1) out[std::countr_zero(rest)] |= bit(u);
  }
  return out;
}

}  // namespace

Digraph::Digraph(std::size_t vertices) : rows_(vertices, 0) {
  if (vertices == 0 || vertices > kMaxVertices) {
    throw ValidationError("digraph: vertex count must be in [1, " + std::to_string(kMaxVertices) + "]");
  }
}

Digraph Digraph::from_rows(std::vector<std::uint64_t> rows) {
  Digraph d(rows.size());
  const std::uint64_t mask = full_mask(rows.size());
  for (std::uint64_t r : rows) {
    if ((r & ~mask) != 0) throw ValidationError("digraph: edge endpoint out of range");
  }
  d.rows_ = std::move(rows);
  return d;
}

Digraph Digraph::identity(std::size_t vertices) {
  Digraph d(vertices);
  for (std::size_t v = 0; v < vertices; ++v) d.rows_[v] = bit(v);
  return d;
}

Digraph Digraph::complete(std::size_t vertices) {
  Digraph d(vertices);
  std::fill(d.rows_.begin(), d.rows_.end(), full_mask(vertices));
  return d;
}

void Digraph::add_edge(std::size_t from, std::size_t to) {
  if (from >= vertices() || to >= vertices()) throw ValidationError("digraph: edge endpoint out of range");
  rows_[from] |= bit(to);
}

std::size_t Digraph::edge_count() const {
  std::size_t total = 0;
  for (std::uint64_t r : rows_) total += static_cast<std::size_t>(std::popcount(r));
  return total;
}

std::size_t Digraph::out_degree(std::size_t v) const { return static_cast<std::size_t>(std::popcount(rows_[v])); }

bool Digraph::is_complete() const {
  const std::uint64_t mask = full_mask(vertices());
  return std::all_of(rows_.begin(), rows_.end(), [mask](std::uint64_t r) { return r == mask; });
}

Digraph underlying_digraph(const Dfa& dfa) {
  Digraph d(dfa.states());
  for (State q = 0; q < dfa.states(); ++q) {
    for (Letter a = 0; a < dfa.letters(); ++a) d.add_edge(q, dfa.next(q, a));
  }
  return d;
}

bool is_strongly_connected(const Digraph& d) {
  const std::uint64_t all = full_mask(d.vertices());
  return forward_closure(d.rows(), 1) == all && forward_closure(transpose(d.rows()), 1) == all;
}

std::size_t period(const Digraph& d) {
  // BFS levels from vertex 0; every edge (u, v) closes a cycle combination of
  // length level(u) + 1 - level(v), and their gcd is the period.
  const std::size_t n = d.vertices();
  std::vector<long> level(n, -1);
  std::vector<std::size_t> queue{0};
  level[0] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::size_t u = queue[head];
    for (std::uint64_t rest = d.row(u); rest != 0; rest &= rest - 1) {
      const auto v = static_cast<std::size_t>(std::countr_zero(rest));
      if (level[v] < 0) {
        level[v] = level[u] + 1;
        queue.push_back(v);
      }
    }
  }
  long g = 0;
  for (std::size_t u = 0; u < n; ++u) {
    if (level[u] < 0) continue;
    for (std::uint64_t rest = d.row(u); rest != 0; rest &= rest - 1) {
      const auto v = static_cast<std::size_t>(std::countr_zero(rest));
      g = std::gcd(g, level[u] + 1 - level[v]);
    }
  }
  return static_cast<std::size_t>(g);
}

bool is_primitive(const Digraph& d) { return is_strongly_connected(d) && period(d) == 1; }

Digraph compose(const Digraph& first, const Digraph& second) {
  if (first.vertices() != second.vertices()) throw ValidationError("compose: vertex counts differ");
  std::vector<std::uint64_t> rows(first.vertices(), 0);
  for (std::size_t u = 0; u < rows.size(); ++u) {
    for (std::uint64_t rest = first.row(u); rest != 0; rest &= rest - 1) {
      rows[u] |= second.row(std::countr_zero(rest));
    }
  }
  return Digraph::from_rows(std::move(rows));
}

Digraph power(const Digraph& d, std::size_t t) {
  Digraph result = Digraph::identity(d.vertices());
  for (std::size_t i = 0; i < t; ++i) result = compose(result, d);
  return result;
}

std::optional<std::size_t> exponent(const Digraph& d) {
  if (!is_primitive(d)) return std::nullopt;
  const std::size_t n = d.vertices();
  const std::size_t bound = (n - 1) * (n - 1) + 1;
  Digraph current = d;
  for (std::size_t t = 1; t <= bound; ++t) {
    if (current.is_complete()) return t;
    current = compose(current, d);
  }
  throw std::logic_error("exponent: Wielandt bound exceeded for a primitive digraph");
}

DigraphSeries parse_digraph_series(std::string_view name) {
  if (name == "W" || name == "w") return DigraphSeries::kW;
  if (name == "D" || name == "d") return DigraphSeries::kD;
  if (name == "V" || name == "v") return DigraphSeries::kV;
  if (name == "R" || name == "r") return DigraphSeries::kR;
  if (name == "G" || name == "g") return DigraphSeries::kG;
  if (name == "G'" || name == "gprime") return DigraphSeries::kGPrime;
  throw ValidationError("unknown digraph series \"" + std::string(name) + "\"");
}

std::string_view digraph_series_name(DigraphSeries series) {
  switch (series) {
    case DigraphSeries::kW: return "W";
    case DigraphSeries::kD: return "D";
    case DigraphSeries::kV: return "V";
    case DigraphSeries::kR: return "R";
    case DigraphSeries::kG: return "G";
    case DigraphSeries::kGPrime: return "G'";
  }
  return "?";
}

Digraph digraph_series(DigraphSeries series, std::size_t n) {
  const bool chain_w = series == DigraphSeries::kW || series == DigraphSeries::kD;
  const std::size_t min_n = chain_w ? 3 : 4;
  if (n < min_n) {
    throw ValidationError("digraph series " + std::string(digraph_series_name(series)) + " needs n >= " +
                          std::to_string(min_n));
  }
  Digraph d(n);
  // 1-indexed edge (i, j) of the definitions is edge (i-1, j-1) here.
  auto edge = [&d](std::size_t i, std::size_t j) { d.add_edge(i - 1, j - 1); };
  for (std::size_t i = 1; i < n; ++i) edge(i, i + 1);
  edge(n, 1);
  edge(n, chain_w ? 2 : 3);
  switch (series) {
    case DigraphSeries::kW:
    case DigraphSeries::kV:
      break;
    case DigraphSeries::kD:
      edge(n - 1, 1);
      break;
    case DigraphSeries::kR:
      edge(n - 1, 2);
      break;
    case DigraphSeries::kG:
      edge(n - 2, 1);
      break;
    case DigraphSeries::kGPrime:
      edge(n - 2, 1);
      edge(n - 1, 2);
      break;
  }
  return d;
}

Colorings colorings(const Digraph& d, std::size_t letters, bool dedup) {
  const std::size_t n = d.vertices();
  if (letters == 0) throw ValidationError("colorings: letter count must be positive");
  Colorings result;
  // Per vertex: every surjection letters -> out-neighbours, as a row.
  std::vector<std::vector<std::vector<State>>> choices(n);
  for (std::size_t v = 0; v < n; ++v) {
    const std::size_t degree = d.out_degree(v);
    if (degree == 0) throw ValidationError("colorings: vertex " + std::to_string(v) + " has no outgoing edge");
    if (degree > letters) {
      result.diagnostic = "vertex " + std::to_string(v) + " has out-degree " + std::to_string(degree) +
                          " > " + std::to_string(letters) + " letters; no colorings exist";
      return result;
    }
    std::vector<State> targets;
    for (std::uint64_t rest = d.row(v); rest != 0; rest &= rest - 1) {
      targets.push_back(static_cast<State>(std::countr_zero(rest)));
    }
    std::vector<std::size_t> pick(letters, 0);
    for (;;) {
      std::uint64_t covered = 0;
      for (std::size_t p : pick) covered |= bit(targets[p]);
      if (covered == d.row(v)) {
        std::vector<State> row(letters);
        for (std::size_t a = 0; a < letters; ++a) row[a] = targets[pick[a]];
        choices[v].push_back(std::move(row));
      }
      std::size_t a = 0;
      while (a < letters && ++pick[a] == degree) pick[a++] = 0;
      if (a == letters) break;
    }
  }

  std::set<CanonicalString> seen;
  std::vector<std::size_t> index(n, 0);
  std::vector<State> table(n * letters);
  for (;;) {
    for (std::size_t v = 0; v < n; ++v) {
      std::copy(choices[v][index[v]].begin(), choices[v][index[v]].end(), table.begin() + v * letters);
    }
    Dfa dfa(n, letters, table);
    if (!dedup || seen.insert(iso_canonical_form(dfa)).second) result.automata.push_back(std::move(dfa));
    std::size_t v = 0;
    while (v < n && ++index[v] == choices[v].size()) index[v++] = 0;
    if (v == n) break;
  }
  return result;
}

std::uint64_t digraph_code(const Digraph& d) {
  const std::size_t n = d.vertices();
  if (n > kMaxCanonicalVertices) throw ValidationError("digraph code: at most 8 vertices");
  std::uint64_t code = 0;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) code = (code << 1) | (d.has_edge(u, v) ? 1U : 0U);
  }
  return code;
}

Digraph digraph_from_code(std::size_t n, std::uint64_t code) {
  if (n == 0 || n > kMaxCanonicalVertices) throw ValidationError("digraph code: need 1 <= n <= 8");
  std::vector<std::uint64_t> rows(n, 0);
  std::size_t shift = n * n;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      --shift;
      if ((code >> shift) & 1U) rows[u] |= bit(v);
    }
  }
  return Digraph::from_rows(std::move(rows));
}

std::string code_to_bitstring(std::size_t n, std::uint64_t code) {
  std::string out(n * n, '0');
  for (std::size_t i = 0; i < n * n; ++i) {
    if ((code >> (n * n - 1 - i)) & 1U) out[i] = '1';
  }
  return out;
}

namespace {

// Code of d with vertex i renamed to position[i].
std::uint64_t permuted_code(const std::vector<std::uint64_t>& rows, std::span<const std::size_t> at_position) {
  const std::size_t n = rows.size();
  std::uint64_t code = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint64_t r = rows[at_position[i]];
    for (std::size_t j = 0; j < n; ++j) code = (code << 1) | ((r >> at_position[j]) & 1U);
  }
  return code;
}

// Self-canonical test for census work: is `code` minimal among all vertex
// relabellings of its digraph?
bool is_self_canonical_code(const std::vector<std::uint64_t>& rows, std::uint64_t code) {
  const std::size_t n = rows.size();
  std::array<std::size_t, kMaxCanonicalVertices> order{};
  std::iota(order.begin(), order.begin() + static_cast<long>(n), std::size_t{0});
  // The least first row puts a loop-free vertex of least out-degree first,
  // with its out-neighbours packed at the end of the row.
  const std::uint64_t row0 = code >> (n * (n - 1));
  std::uint64_t best_row0 = ~std::uint64_t{0};
  for (std::size_t v = 0; v < n; ++v) {
    const std::uint64_t loop = (rows[v] >> v) & 1U;
    const auto others = static_cast<std::size_t>(std::popcount(rows[v] & ~bit(v)));
    const std::uint64_t candidate = (loop << (n - 1)) | (bit(others) - 1);
    best_row0 = std::min(best_row0, candidate);
  }
  if (row0 != best_row0) return false;
  while (std::next_permutation(order.begin(), order.begin() + static_cast<long>(n))) {
    if (permuted_code(rows, std::span<const std::size_t>(order.data(), n)) < code) return false;
  }
  return true;
}

}  // namespace

std::uint64_t digraph_iso_canonical(const Digraph& d) {
  const std::size_t n = d.vertices();
  if (n > kMaxCanonicalVertices) {
    throw ValidationError("digraph_iso_canonical: at most " + std::to_string(kMaxCanonicalVertices) + " vertices");
  }
  std::array<std::size_t, kMaxCanonicalVertices> order{};
  std::iota(order.begin(), order.begin() + static_cast<long>(n), std::size_t{0});
  std::uint64_t best = ~std::uint64_t{0};
  do {
    best = std::min(best, permuted_code(d.rows(), std::span<const std::size_t>(order.data(), n)));
  } while (std::next_permutation(order.begin(), order.begin() + static_cast<long>(n)));
  return best;
}

DigraphCensus digraph_census_range(std::size_t n, std::uint64_t begin, std::uint64_t end,
                                   const DigraphCensusOptions& options) {
  if (n == 0 || n > kMaxDigraphCensusVertices) {
    throw ResourceRefusal("digraph census: n must be in [1, " + std::to_string(kMaxDigraphCensusVertices) +
                          "]; 2^(n^2) digraphs are enumerated");
  }
  DigraphCensus census;
  const std::uint64_t all = full_mask(n);
  std::vector<std::uint64_t> rows(n);
  for (std::uint64_t code = begin; code < end; ++code) {
    std::uint64_t any_out = all;
    std::uint64_t any_in = 0;
    std::size_t shift = n * n;
    for (std::size_t u = 0; u < n; ++u) {
      shift -= n;
      // The code stores column 0 as the high bit of each row; reverse.
      const std::uint64_t chunk = (code >> shift) & all;
      std::uint64_t r = 0;
      for (std::size_t v = 0; v < n; ++v) r |= ((chunk >> (n - 1 - v)) & 1U) << v;
      rows[u] = r;
      if (r == 0) any_out = 0;
      any_in |= r;
    }
    const bool may_be_primitive = any_out == all && any_in == all;
    if (options.primitive_only && !may_be_primitive) continue;
    if (options.dedup_iso && !is_self_canonical_code(rows, code)) continue;
    const Digraph d = Digraph::from_rows(rows);
    const auto e = may_be_primitive ? exponent(d) : std::nullopt;
    if (e) {
      census.exponents.add(*e);
    } else if (!options.primitive_only) {
      ++census.not_primitive;
    }
  }
  return census;
}

DigraphCensus digraph_census(std::size_t n, const DigraphCensusOptions& options, std::size_t jobs) {
  if (n == 0 || n > kMaxDigraphCensusVertices) {
    throw ResourceRefusal("digraph census: n must be in [1, " + std::to_string(kMaxDigraphCensusVertices) +
                          "]; 2^(n^2) digraphs are enumerated");
  }
  const std::uint64_t total = std::uint64_t{1} << (n * n);
  const std::size_t chunks = std::max<std::size_t>(1, std::min<std::uint64_t>(total, 64 * jobs));
  std::vector<DigraphCensus> parts(chunks);
  parallel_for(chunks, jobs, [&](std::size_t i) {
    const std::uint64_t lo = total * i / chunks;
    const std::uint64_t hi = total * (i + 1) / chunks;
    parts[i] = digraph_census_range(n, lo, hi, options);
  });
  DigraphCensus merged;
  for (const auto& part : parts) {
    merged.exponents.merge(part.exponents);
    merged.not_primitive += part.not_primitive;
  }
  return merged;
}

Digraph parse_digraph(std::string_view text) {
  std::istringstream in{std::string(text)};
  long long n = 0;
  if (!(in >> n) || n <= 0 || static_cast<unsigned long long>(n) > Digraph::kMaxVertices) {
    throw ValidationError("digraph file: first line must be a vertex count in [1, 64]");
  }
  Digraph d(static_cast<std::size_t>(n));
  for (long long u = 0; u < n; ++u) {
    std::string row;
    if (!(in >> row) || row.size() != static_cast<std::size_t>(n)) {
      throw ValidationError("digraph file: row " + std::to_string(u) + " must have " + std::to_string(n) +
                            " characters");
    }
    for (long long v = 0; v < n; ++v) {
      const char c = row[static_cast<std::size_t>(v)];
      if (c == '1') {
        d.add_edge(static_cast<std::size_t>(u), static_cast<std::size_t>(v));
      } else if (c != '0') {
        throw ValidationError("digraph file: row " + std::to_string(u) + " has a character other than 0/1");
      }
    }
  }
  std::string extra;
  if (in >> extra) throw ValidationError("digraph file: trailing content");
  return d;
}

std::string serialize_digraph(const Digraph& d) {
  std::string out = std::to_string(d.vertices()) + "\n";
  for (std::size_t u = 0; u < d.vertices(); ++u) {
    for (std::size_t v = 0; v < d.vertices(); ++v) out += d.has_edge(u, v) ? '1' : '0';
    out += '\n';
  }
  return out;
}

}  // namespace synchrolab
