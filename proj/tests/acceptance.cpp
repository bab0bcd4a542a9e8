// Acceptance checks: one PASS/FAIL line per criterion, non-zero exit if any
// criterion fails. The automata census at n = 7 dominates the runtime.

#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <mutex>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "synchrolab/canonical.hpp"
#include "synchrolab/census.hpp"
#include "synchrolab/digraph.hpp"
#include "synchrolab/parallel.hpp"
#include "synchrolab/series.hpp"
#include "synchrolab/sync.hpp"
#include "synchrolab/transforms.hpp"

using namespace synchrolab;

namespace {

// Collects failure messages for one criterion.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  bool ok() const { return failures_.empty(); }
  const std::vector<std::string>& failures() const { return failures_; }

 private:
  std::vector<std::string> failures_;
};

bool in_domain(Series s, std::size_t n) {
  return n >= series_min_states(s) && !(series_requires_odd(s) && n % 2 == 0);
}

std::size_t closed_form(Series s, std::size_t n) {
  switch (s) {
    case Series::kC: return (n - 1) * (n - 1);
    case Series::kW: return n * n - 3 * n + 3;
    case Series::kE: return n * n - 3 * n + 2;
    case Series::kH: return n * n - 4 * n + 6;
    case Series::kDPrime: return n * n - 3 * n + 4;
    case Series::kDDouble: return n * n - 3 * n + 2;
    case Series::kF: return n * n - 3 * n + 3;
    case Series::kB: return n * n - 3 * n + 2;
    case Series::kG: return n * n - 4 * n + 7;
  }
  return 0;
}

std::string label(Series s, std::size_t n) { return std::string(series_name(s)) + "_" + std::to_string(n); }

void series_thresholds(Check& c) {
  for (Series s : kAllSeries) {
    for (std::size_t n = 4; n <= 11; ++n) {
      if (!in_domain(s, n)) continue;
      const ResetResult r = reset_threshold(build_series(s, n));
      c.expect(r.status == ResetStatus::kSynchronizing && r.threshold == closed_form(s, n),
               label(s, n) + ": rt " + std::to_string(r.threshold) + ", expected " + std::to_string(closed_form(s, n)));
    }
  }
}

void claimed_words(Check& c) {
  for (Series s : kAllSeries) {
    for (std::size_t n = 4; n <= 11; ++n) {
      if (!in_domain(s, n)) continue;
      const Dfa dfa = build_series(s, n);
      const Word w = claimed_word(s, n);
      c.expect(image(dfa, dfa.all_states(), w).is_singleton(), label(s, n) + ": claimed word does not reset");
      c.expect(w.size() == closed_form(s, n) && w.size() == reset_threshold(dfa).threshold,
               label(s, n) + ": claimed word length " + std::to_string(w.size()) + " is not optimal");
    }
  }
}

void digraph_exponents(Check& c) {
  auto expect_exponent = [&](DigraphSeries s, std::size_t n, std::size_t expected) {
    const auto e = exponent(digraph_series(s, n));
    c.expect(e == expected, std::string(digraph_series_name(s)) + "_" + std::to_string(n) + ": exponent " +
                                (e ? std::to_string(*e) : "none") + ", expected " + std::to_string(expected));
  };
  for (std::size_t n = 3; n <= 12; ++n) {
    expect_exponent(DigraphSeries::kW, n, (n - 1) * (n - 1) + 1);
    expect_exponent(DigraphSeries::kD, n, (n - 1) * (n - 1));
  }
  for (std::size_t n = 5; n <= 11; n += 2) {
    expect_exponent(DigraphSeries::kV, n, n * n - 3 * n + 4);
    expect_exponent(DigraphSeries::kR, n, n * n - 3 * n + 3);
    expect_exponent(DigraphSeries::kG, n, n * n - 3 * n + 2);
    expect_exponent(DigraphSeries::kGPrime, n, n * n - 3 * n + 2);
  }
}

void digraph_census_5(Check& c, std::size_t jobs) {
  const DigraphCensus r = digraph_census(5, DigraphCensusOptions{}, jobs);
  const std::vector<std::pair<std::size_t, std::uint64_t>> expected{{17, 1}, {16, 1}, {15, 0}, {14, 1},
                                                                    {13, 1}, {12, 2}, {11, 4}};
  for (const auto& [e, count] : expected) {
    c.expect(r.exponents.at(e) == count, "exponent " + std::to_string(e) + ": " +
                                             std::to_string(r.exponents.at(e)) + " classes, expected " +
                                             std::to_string(count));
  }
  c.expect(!r.exponents.empty() && r.exponents.max_value() <= 17,
           "largest exponent " + std::to_string(r.exponents.max_value()) + " exceeds the Wielandt bound 17");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void automata_census(Check& c, std::size_t jobs) {
  CensusOptions six;
  six.min_threshold = 20;
  const std::string golden = read_file(SYNCHROLAB_GOLDEN_DIR "/census_n6_k2_min20.tsv");
  const std::string observed6 = census(6, 2, six, jobs).to_tsv();
  c.expect(!golden.empty() && observed6 == golden, "n = 6 census differs from the golden file:\n" + observed6);

  CensusOptions seven;
  seven.min_threshold = 30;
  const CensusResult r = census(7, 2, seven, jobs);
  std::cout << "  n = 7, min threshold 30:\n";
  std::istringstream rows(r.to_tsv());
  for (std::string line; std::getline(rows, line);) std::cout << "    " << line << "\n";
  c.expect(r.thresholds.at(36) == 1, "threshold 36: " + std::to_string(r.thresholds.at(36)) + " classes, expected 1");
  c.expect(r.thresholds.max_value() == 36, "largest threshold is not 36");
  for (std::size_t rt = 33; rt <= 35; ++rt) {
    c.expect(r.thresholds.at(rt) == 0, "threshold " + std::to_string(rt) + " is not empty");
  }
}

void enumeration_counts(Check& c, std::size_t jobs) {
  const std::uint64_t seven = count_canonical(7, 2, Shard{}, jobs);
  c.expect(seven == 256182290, "n = 7 count " + std::to_string(seven) + ", expected 256182290");
  for (int n = 1; n <= 4; ++n) {
    const std::uint64_t got = count_canonical(n, 2);
    const std::uint64_t want = oracle::count_canonical(n, 2);
    c.expect(got == want, "n = " + std::to_string(n) + ": enumerated " + std::to_string(got) + ", brute force " +
                              std::to_string(want));
  }
}

void bound_properties(Check& c, std::size_t jobs) {
  std::mutex mutex;
  std::uint64_t strongly_connected = 0;
  std::uint64_t applicable = 0;
  for (std::size_t n = 2; n <= 5; ++n) {
    CensusCallbacks callbacks;
    callbacks.on_counted = [&, n](std::span<const std::uint8_t> table, std::size_t rt) {
      const Dfa dfa(n, 2, std::vector<State>(table.begin(), table.end()));
      const std::string where = "[" + iso_canonical_form(dfa).to_string() + "]";
      std::vector<std::string> local;
      std::uint64_t sc = 0;
      std::uint64_t app = 0;
      if (is_strongly_connected(dfa)) {
        ++sc;
        const auto e = exponent(underlying_digraph(dfa));
        if (!e || *e > rt + n - 1) local.push_back(where + ": exponent exceeds rt + n - 1");
      }
      for (const Letter first : {0U, 1U}) {
        const std::vector<Letter> order{first, 1 - first};
        const IdempotentBoundReport r = check_simple_idempotent_bound(permute_letters(dfa, order));
        if (!r.applicable || !r.threshold) continue;
        ++app;
        if (!r.holds) local.push_back(where + ": idempotent bound fails");
      }
      std::lock_guard lock(mutex);
      strongly_connected += sc;
      applicable += app;
      for (const auto& f : local) c.expect(false, f);
    };
    census(n, 2, CensusOptions{}, jobs, callbacks);
  }
  for (Series s : kAllSeries) {
    for (std::size_t n = 4; n <= 11; ++n) {
      if (!in_domain(s, n)) continue;
      const Dfa dfa = build_series(s, n);
      const auto e = exponent(underlying_digraph(dfa));
      c.expect(e && *e <= reset_threshold(dfa).threshold + n - 1, label(s, n) + ": exponent exceeds rt + n - 1");
    }
  }
  c.expect(strongly_connected > 0 && applicable > 0, "no automata exercised the bounds");
  std::cout << "  " << strongly_connected << " strongly connected classes, " << applicable
            << " applicable letter orders\n";
}

void transform_identities(Check& c) {
  for (std::size_t n = 4; n <= 9; ++n) {
    const Dfa derived = derive(build_series(Series::kC, n), {Word::parse("b"), Word::parse("ab")});
    c.expect(iso_canonical_form(derived) == iso_canonical_form(build_series(Series::kW, n)),
             "C_" + std::to_string(n) + " with [b, ab] is not W_" + std::to_string(n));
  }
  for (std::size_t n = 5; n <= 9; ++n) {
    const Dfa e = build_series(Series::kE, n);
    StateSet target = e.all_states();
    target.erase(1);
    const Dfa derived = derive(e, {Word::parse("aa"), Word::parse("b")});
    const bool closed = reachable_from(derived, target) == target;
    c.expect(closed && iso_canonical_form(subautomaton(derived, target)) ==
                           iso_canonical_form(build_series(Series::kC, n - 1)),
             "E_" + std::to_string(n) + " restriction is not C_" + std::to_string(n - 1));
  }
}

void frobenius_suite(Check& c) {
  for (long long p = 2; p <= 12; ++p) {
    for (long long q = p + 1; q <= 12; ++q) {
      if (std::gcd(p, q) != 1) continue;
      long long largest = -1;
      for (long long x = 0; x <= p * q; ++x) {
        if (!representable(x, p, q)) largest = x;
      }
      c.expect(largest == frobenius(p, q), "(" + std::to_string(p) + ", " + std::to_string(q) +
                                               "): largest gap " + std::to_string(largest));
    }
  }
}

void determinism(Check& c) {
  CensusOptions options;
  options.min_threshold = 20;
  const std::string reference = census(6, 2, options, 1).to_tsv();
  for (std::size_t jobs : {2, 8}) {
    c.expect(census(6, 2, options, jobs).to_tsv() == reference, std::to_string(jobs) + " workers differ");
  }
  for (std::size_t shards : {2, 3, 7}) {
    Histogram merged;
    for (std::size_t i = 0; i < shards; ++i) {
      options.shard = Shard{i, shards};
      merged.merge(census(6, 2, options, 2).thresholds);
    }
    c.expect(merged.to_tsv("threshold", 20) == reference, std::to_string(shards) + " shards differ");
  }
  CensusOptions full;
  const std::string full_reference = census(5, 2, full, 1).to_tsv();
  c.expect(census(5, 2, full, 8).to_tsv() == full_reference, "full n = 5 census differs at 8 workers");
}

}  // namespace

int main() {
  const std::size_t jobs = default_jobs();
  struct Criterion {
    const char* name;
    std::function<void(Check&)> run;
  };
  const std::vector<Criterion> criteria{
      {"series reset thresholds match closed forms", series_thresholds},
      {"claimed words reset and are optimal", claimed_words},
      {"extremal digraph exponents", digraph_exponents},
      {"digraph census n = 5", [&](Check& c) { digraph_census_5(c, jobs); }},
      {"automata census n = 6 golden and n = 7 gap", [&](Check& c) { automata_census(c, jobs); }},
      {"enumeration counts", [&](Check& c) { enumeration_counts(c, jobs); }},
      {"exponent and idempotent bounds", [&](Check& c) { bound_properties(c, jobs); }},
      {"transform identities", transform_identities},
      {"Frobenius suite", frobenius_suite},
      {"census determinism across workers and shards", determinism},
  };
  std::size_t failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].run(check);
    } catch (const std::exception& e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << "criterion " << i + 1 << ": " << (check.ok() ? "PASS" : "FAIL") << " - " << criteria[i].name
              << " (" << std::fixed << std::setprecision(1) << seconds << " s)" << std::endl;
    for (const auto& f : check.failures()) std::cout << "  " << f << "\n";
    failed += check.ok() ? 0 : 1;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
  return failed == 0 ? 0 : 1;
}
