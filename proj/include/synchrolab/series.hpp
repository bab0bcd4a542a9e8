#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>

#include "synchrolab/dfa.hpp"
#include "synchrolab/word.hpp"

namespace synchrolab {

// Two-letter slowly synchronizing families. Letter 0 is a, letter 1 is b;
// the 1-indexed definitions are shifted down by one.
enum class Series { kC, kW, kE, kH, kDPrime, kDDouble, kF, kB, kG };

inline constexpr std::array<Series, 9> kAllSeries = {Series::kC,       Series::kW, Series::kE,
                                                     Series::kH,       Series::kDPrime, Series::kDDouble,
                                                     Series::kF,       Series::kB, Series::kG};

// Accepts the command-line names c, w, e, h, dprime, ddouble, f, b, g.
Series parse_series(std::string_view name);
std::string_view series_name(Series s);

// Smallest n and whether n must be odd. Throws ValidationError otherwise.
std::size_t series_min_states(Series s);
bool series_requires_odd(Series s);
void check_series_states(Series s, std::size_t n);

Dfa build_series(Series s, std::size_t n);

std::size_t claimed_threshold(Series s, std::size_t n);

Word claimed_word(Series s, std::size_t n);

struct SeriesReport {
  Series series;
  std::size_t states = 0;
  std::size_t claimed = 0;
  std::size_t computed = 0;
  bool thresholds_match = false;
  bool word_synchronizes = false;
  bool word_minimal = false;  // |claimed word| equals the computed threshold

  bool ok() const { return thresholds_match && word_synchronizes && word_minimal; }
  // "claimed 57, computed 57, word OK, minimal OK"
  std::string summary() const;
};

SeriesReport verify_series(Series s, std::size_t n);

}  // namespace synchrolab
