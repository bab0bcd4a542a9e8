#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "../oracles.hpp"
#include "synchrolab/canonical.hpp"
#include "synchrolab/digraph.hpp"
#include "synchrolab/errors.hpp"
#include "synchrolab/series.hpp"
#include "synchrolab/sync.hpp"

using namespace synchrolab;

namespace {

oracle::Matrix matrix_of(const Digraph& d) {
  const std::size_t n = d.vertices();
  oracle::Matrix m(n, std::vector<bool>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = d.has_edge(i, j);
  }
  return m;
}

std::size_t wielandt(std::size_t n) { return (n - 1) * (n - 1) + 1; }

// Exponent histogram over isomorphism classes of primitive n-vertex
// digraphs, by relabelling every adjacency matrix.
Histogram brute_digraph_census(std::size_t n) {
  std::set<std::vector<bool>> seen;
  Histogram h;
  const std::size_t cells = n * n;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << cells); ++bits) {
    oracle::Matrix m(n, std::vector<bool>(n));
    for (std::size_t c = 0; c < cells; ++c) m[c / n][c % n] = (bits >> c) & 1U;
    const auto e = oracle::exponent(m, wielandt(n));
    if (!e) continue;
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<bool> best;
    do {
      std::vector<bool> key(cells);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) key[perm[i] * n + perm[j]] = m[i][j];
      }
      if (best.empty() || key < best) best = key;
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (seen.insert(best).second) h.add(*e);
  }
  return h;
}

}  // namespace

TEST_CASE("digraph basics") {
  Digraph d(3);
  d.add_edge(0, 1);
  d.add_edge(1, 2);
  d.add_edge(2, 0);
  CHECK(d.edge_count() == 3);
  CHECK(d.out_degree(0) == 1);
  CHECK(is_strongly_connected(d));
  CHECK(period(d) == 3);
  CHECK_FALSE(is_primitive(d));
  CHECK_FALSE(exponent(d).has_value());
  d.add_edge(2, 1);
  CHECK(period(d) == 1);
  CHECK(is_primitive(d));
  CHECK(Digraph::complete(3).is_complete());
  CHECK(power(d, 0) == Digraph::identity(3));
  CHECK(power(d, 3) == compose(compose(d, d), d));
  CHECK_THROWS_AS(d.add_edge(0, 3), ValidationError);
}

TEST_CASE("exponent agrees with repeated boolean matrix multiplication") {
  std::mt19937 rng(99);
  int primitive_seen = 0;
  for (int trial = 0; trial < 600; ++trial) {
    const std::size_t n = 2 + trial % 7;
    std::bernoulli_distribution coin(0.25);
    Digraph d(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (coin(rng)) d.add_edge(i, j);
      }
    }
    const auto expected = oracle::exponent(matrix_of(d), wielandt(n));
    CAPTURE(serialize_digraph(d));
    CHECK(exponent(d) == expected);
    CHECK(is_primitive(d) == expected.has_value());
    primitive_seen += expected ? 1 : 0;
  }
  CHECK(primitive_seen > 20);
}

TEST_CASE("extremal digraph series exponents") {
  for (std::size_t n = 3; n <= 12; ++n) {
    CHECK(exponent(digraph_series(DigraphSeries::kW, n)) == (n - 1) * (n - 1) + 1);
    CHECK(exponent(digraph_series(DigraphSeries::kD, n)) == (n - 1) * (n - 1));
  }
  for (std::size_t n = 5; n <= 11; n += 2) {
    CHECK(exponent(digraph_series(DigraphSeries::kV, n)) == n * n - 3 * n + 4);
    CHECK(exponent(digraph_series(DigraphSeries::kR, n)) == n * n - 3 * n + 3);
    CHECK(exponent(digraph_series(DigraphSeries::kG, n)) == n * n - 3 * n + 2);
    CHECK(exponent(digraph_series(DigraphSeries::kGPrime, n)) == n * n - 3 * n + 2);
  }
  CHECK_THROWS_AS(digraph_series(DigraphSeries::kW, 2), ValidationError);
  CHECK(parse_digraph_series("G'") == DigraphSeries::kGPrime);
  CHECK(parse_digraph_series("gprime") == DigraphSeries::kGPrime);
  CHECK_THROWS_AS(parse_digraph_series("Q"), ValidationError);
}

TEST_CASE("underlying digraphs of automata series") {
  CHECK(underlying_digraph(build_series(Series::kW, 9)) == digraph_series(DigraphSeries::kW, 9));
  CHECK(exponent(underlying_digraph(build_series(Series::kW, 9))) == 65);
  const Digraph c7 = underlying_digraph(build_series(Series::kC, 7));
  CHECK(exponent(c7) == oracle::exponent(matrix_of(c7), wielandt(7)));
}

TEST_CASE("digraph codes") {
  const Digraph d = digraph_series(DigraphSeries::kD, 5);
  CHECK(digraph_from_code(5, digraph_code(d)) == d);
  CHECK(code_to_bitstring(2, digraph_code(Digraph::complete(2))) == "1111");
  // relabelling does not change the iso canonical code
  Digraph relabelled(5);
  const std::vector<std::size_t> perm{3, 0, 4, 1, 2};
  for (std::size_t i = 0; i < 5; ++i) {
    for (std::size_t j = 0; j < 5; ++j) {
      if (d.has_edge(i, j)) relabelled.add_edge(perm[i], perm[j]);
    }
  }
  CHECK(digraph_iso_canonical(relabelled) == digraph_iso_canonical(d));
  CHECK(digraph_iso_canonical(d) != digraph_iso_canonical(digraph_series(DigraphSeries::kW, 5)));
}

TEST_CASE("digraph census agrees with brute force for small n") {
  for (std::size_t n = 1; n <= 3; ++n) {
    CAPTURE(n);
    CHECK(digraph_census(n, DigraphCensusOptions{}, 2).exponents == brute_digraph_census(n));
  }
}

TEST_CASE("digraph census for four vertices") {
  const DigraphCensus r = digraph_census(4, DigraphCensusOptions{});
  CHECK(r.exponents.to_tsv("exponent") == "exponent\tcount\n10\t1\n9\t1\n6\t13\n5\t51\n4\t192\n3\t597\n2\t303\n1\t1\n");
  CHECK(r.exponents == brute_digraph_census(4));
  DigraphCensusOptions labelled;
  labelled.dedup_iso = false;
  labelled.primitive_only = false;
  const DigraphCensus all = digraph_census(3, labelled);
  CHECK(all.exponents.total() + all.not_primitive == 512);
  CHECK_THROWS_AS(digraph_census(6, DigraphCensusOptions{}), ResourceRefusal);
}

TEST_CASE("colorings") {
  const Colorings d5 = colorings(digraph_series(DigraphSeries::kD, 5), 2, true);
  CHECK(d5.automata.size() == 2);
  for (const Dfa& dfa : d5.automata) {
    CHECK(underlying_digraph(dfa) == digraph_series(DigraphSeries::kD, 5));
  }
  const Colorings w = colorings(digraph_series(DigraphSeries::kW, 6), 2, true);
  REQUIRE(w.automata.size() == 1);
  CHECK(iso_canonical_form(w.automata[0]) == iso_canonical_form(build_series(Series::kW, 6)));
  // without dedup both letter orders of every coloring appear
  CHECK(colorings(digraph_series(DigraphSeries::kW, 6), 2, false).automata.size() == 2);
  // a vertex of out-degree 3 cannot be coloured surjectively by two letters
  const Colorings none = colorings(Digraph::complete(3), 2, true);
  CHECK(none.automata.empty());
  CHECK_FALSE(none.diagnostic.empty());
}

TEST_CASE("digraph text format") {
  const Digraph d = digraph_series(DigraphSeries::kW, 4);
  CHECK(parse_digraph(serialize_digraph(d)) == d);
  CHECK(serialize_digraph(Digraph::complete(2)) == "2\n11\n11\n");
  CHECK_THROWS_AS(parse_digraph("2\n11\n1\n"), ValidationError);
  CHECK_THROWS_AS(parse_digraph("2\n12\n11\n"), ValidationError);
  CHECK_THROWS_AS(parse_digraph("2\n11\n11\n11\n"), ValidationError);
}
