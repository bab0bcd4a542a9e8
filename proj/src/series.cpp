#include "synchrolab/series.hpp"

#include <functional>
#include <vector>

#include "synchrolab/errors.hpp"
#include "synchrolab/sync.hpp"

namespace synchrolab {
namespace {

constexpr Letter kA = 0;
constexpr Letter kB = 1;

// Builds a two-letter automaton from 1-indexed action rules.
Dfa from_rules(std::size_t n, const std::function<std::size_t(std::size_t)>& a,
               const std::function<std::size_t(std::size_t)>& b) {
  std::vector<std::vector<State>> columns(2, std::vector<State>(n));
  for (std::size_t i = 1; i <= n; ++i) {
    columns[kA][i - 1] = static_cast<State>(a(i) - 1);
    columns[kB][i - 1] = static_cast<State>(b(i) - 1);
  }
  return Dfa::from_columns(columns);
}

Word letters(std::string_view text) { return Word::parse(text); }

Word power(std::string_view text, std::size_t count) { return letters(text).repeat(count); }

}  // namespace

Series parse_series(std::string_view name) {
  if (name == "c") return Series::kC;
  if (name == "w") return Series::kW;
  if (name == "e") return Series::kE;
  if (name == "h") return Series::kH;
  if (name == "dprime") return Series::kDPrime;
  if (name == "ddouble") return Series::kDDouble;
  if (name == "f") return Series::kF;
  if (name == "b") return Series::kB;
  if (name == "g") return Series::kG;
  throw ValidationError("unknown series \"" + std::string(name) +
                        "\" (expected c, w, e, h, dprime, ddouble, f, b or g)");
}

std::string_view series_name(Series s) {
  switch (s) {
    case Series::kC: return "c";
    case Series::kW: return "w";
    case Series::kE: return "e";
    case Series::kH: return "h";
    case Series::kDPrime: return "dprime";
    case Series::kDDouble: return "ddouble";
    case Series::kF: return "f";
    case Series::kB: return "b";
    case Series::kG: return "g";
  }
  return "?";
}

bool series_requires_odd(Series s) { return s == Series::kF || s == Series::kB || s == Series::kG; }

std::size_t series_min_states(Series s) { return series_requires_odd(s) ? 5 : 4; }

void check_series_states(Series s, std::size_t n) {
  if (n < series_min_states(s)) {
    throw ValidationError("series " + std::string(series_name(s)) + " needs n >= " +
                          std::to_string(series_min_states(s)));
  }
  if (n > Dfa::kMaxStates) throw ValidationError("series: n too large");
  if (series_requires_odd(s) && n % 2 == 0) {
    throw ValidationError("series " + std::string(series_name(s)) + " is defined for odd n only");
  }
}

Dfa build_series(Series s, std::size_t n) {
  check_series_states(s, n);
  const auto cycle = [n](std::size_t i) { return i < n ? i + 1 : 1; };
  switch (s) {
    case Series::kC:
      return from_rules(n, [n](std::size_t i) { return i < n ? i : 1; }, cycle);
    case Series::kW:
      return from_rules(n, [n](std::size_t i) { return i < n ? i + 1 : 2; }, cycle);
    case Series::kE:
      // b sends both 1 and 2 to 3; the merge makes ab and b share an image.
      return from_rules(
          n, [](std::size_t i) { return i == 1 ? 2 : i == 2 ? 3 : i; },
          [n](std::size_t i) { return i == 1 ? 3 : i < n ? i + 1 : 1; });
    case Series::kH:
      return from_rules(
          n, [n](std::size_t i) { return i == 1 ? n : i == n ? 1 : i; },
          [n](std::size_t i) { return i < n - 1 ? i + 1 : i == n - 1 ? 1 : 3; });
    case Series::kDPrime:
      return from_rules(n, [n](std::size_t i) { return i <= n - 2 ? i + 1 : i == n - 1 ? 1 : 2; }, cycle);
    case Series::kDDouble:
      return from_rules(
          n, [n](std::size_t i) { return i <= n - 2 ? i + 1 : 1; },
          [n](std::size_t i) { return i <= n - 1 ? i + 1 : 2; });
    case Series::kF:
      return from_rules(n, [n](std::size_t i) { return i < n ? i : 2; }, cycle);
    case Series::kB:
      return from_rules(n, [n](std::size_t i) { return i < n - 1 ? i : i == n - 1 ? 1 : 2; }, cycle);
    case Series::kG:
      return from_rules(
          n, [n](std::size_t i) { return i <= n - 3 ? i + 1 : i == n - 2 ? 1 : i == n - 1 ? n : 3; }, cycle);
  }
  throw ValidationError("unknown series");
}

std::size_t claimed_threshold(Series s, std::size_t n) {
  check_series_states(s, n);
  const std::size_t sq = n * n;
  switch (s) {
    case Series::kC: return (n - 1) * (n - 1);
    case Series::kW: return sq - 3 * n + 3;
    case Series::kE: return sq - 3 * n + 2;
    case Series::kH: return sq - 4 * n + 6;
    case Series::kDPrime: return sq - 3 * n + 4;
    case Series::kDDouble: return sq - 3 * n + 2;
    case Series::kF: return sq - 3 * n + 3;
    case Series::kB: return sq - 3 * n + 2;
    case Series::kG: return sq - 4 * n + 7;
  }
  throw ValidationError("unknown series");
}

Word claimed_word(Series s, std::size_t n) {
  check_series_states(s, n);
  const Word a = letters("a");
  const Word b = letters("b");
  switch (s) {
    case Series::kC:  // (a b^{n-1})^{n-2} a
      return (a + b.repeat(n - 1)).repeat(n - 2) + a;
    case Series::kW:  // (a b^{n-2})^{n-2} a
    case Series::kF:
      return (a + b.repeat(n - 2)).repeat(n - 2) + a;
    case Series::kE:  // (a^2 b^{n-2})^{n-3} a^2
      return (power("a", 2) + b.repeat(n - 2)).repeat(n - 3) + power("a", 2);
    case Series::kH:  // b (a b^{n-2})^{n-3} a b
      return b + (a + b.repeat(n - 2)).repeat(n - 3) + letters("ab");
    case Series::kDPrime:  // (a b^{n-2})^{n-2} b a
      return (a + b.repeat(n - 2)).repeat(n - 2) + letters("ba");
    case Series::kDDouble:  // (b a^{n-1})^{n-3} b a
      return (b + a.repeat(n - 1)).repeat(n - 3) + letters("ba");
    case Series::kB: {  // (a b^{n-2})^{(n-3)/2} a b^{n-3} (a b^{n-2})^{(n-3)/2} a
      const Word half = (a + b.repeat(n - 2)).repeat((n - 3) / 2);
      return half + a + b.repeat(n - 3) + half + a;
    }
    case Series::kG:  // a^2 (b a b a^{n-3})^{n-4} b a b a^2
      return power("a", 2) + (letters("bab") + a.repeat(n - 3)).repeat(n - 4) + letters("bab") + power("a", 2);
  }
  throw ValidationError("unknown series");
}

std::string SeriesReport::summary() const {
  return "claimed " + std::to_string(claimed) + ", computed " + std::to_string(computed) + ", word " +
         (word_synchronizes ? "OK" : "FAIL") + ", minimal " + (word_minimal ? "OK" : "FAIL");
}

SeriesReport verify_series(Series s, std::size_t n) {
  const Dfa dfa = build_series(s, n);
  SeriesReport report{s, n};
  report.claimed = claimed_threshold(s, n);
  const ResetResult exact = reset_threshold(dfa);
  if (exact.status != ResetStatus::kSynchronizing) {
    throw NotSynchronizingError("verify_series: series automaton is not synchronizing");
  }
  report.computed = exact.threshold;
  report.thresholds_match = report.claimed == report.computed;
  const Word w = claimed_word(s, n);
  report.word_synchronizes = image(dfa, dfa.all_states(), w).is_singleton();
  report.word_minimal = w.size() == report.computed;
  return report;
}

}  // namespace synchrolab
