#include "synchrolab/canonical.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <numeric>

#include "synchrolab/parallel.hpp"

namespace synchrolab {
namespace {

constexpr std::size_t kMaxCanonicalLetters = 8;

// Bitmask of states reachable from each state.
std::vector<std::uint64_t> reach_masks(std::span<const std::uint8_t> table, std::size_t n, std::size_t k) {
  std::vector<std::uint64_t> reach(n);
  for (std::size_t q = 0; q < n; ++q) {
    std::uint64_t seen = std::uint64_t{1} << q;
    std::uint64_t frontier = seen;
    while (frontier != 0) {
      std::uint64_t next = 0;
      for (std::uint64_t rest = frontier; rest != 0; rest &= rest - 1) {
        const auto p = static_cast<std::size_t>(std::countr_zero(rest));
        for (std::size_t a = 0; a < k; ++a) next |= std::uint64_t{1} << table[p * k + a];
      }
      frontier = next & ~seen;
      seen |= next;
    }
    reach[q] = seen;
  }
  return reach;
}

// Compares the BFS encoding from (start, order) against `target` symbol by
// symbol. Returns <0, 0 or >0 like a three-way comparison. `start` must
// reach every state.
int compare_encoding(std::span<const std::uint8_t> table, std::size_t n, std::size_t k, std::size_t start,
                     std::span<const Letter> order, std::span<const std::uint8_t> target) {
  std::array<std::uint8_t, StateSet::kCapacity> number{};
  std::array<std::uint8_t, StateSet::kCapacity> by_number{};
  std::uint64_t numbered = std::uint64_t{1} << start;
  number[start] = 0;
  by_number[0] = static_cast<std::uint8_t>(start);
  std::size_t next_number = 1;
  std::size_t pos = 0;
  for (std::size_t block = 0; block < n; ++block) {
    const std::size_t q = by_number[block];
    for (std::size_t i = 0; i < k; ++i) {
      const std::size_t t = table[q * k + order[i]];
      if (((numbered >> t) & 1U) == 0) {
        numbered |= std::uint64_t{1} << t;
        number[t] = static_cast<std::uint8_t>(next_number);
        by_number[next_number++] = static_cast<std::uint8_t>(t);
      }
      const int diff = static_cast<int>(number[t]) - static_cast<int>(target[pos++]);
      if (diff != 0) return diff;
    }
  }
  return 0;
}

std::vector<std::uint8_t> encoding(std::span<const std::uint8_t> table, std::size_t n, std::size_t k,
                                   std::size_t start, std::span<const Letter> order) {
  std::vector<std::uint8_t> out(n * k);
  std::array<std::uint8_t, StateSet::kCapacity> number{};
  std::array<std::uint8_t, StateSet::kCapacity> by_number{};
  std::uint64_t numbered = std::uint64_t{1} << start;
  by_number[0] = static_cast<std::uint8_t>(start);
  std::size_t next_number = 1;
  std::size_t pos = 0;
  for (std::size_t block = 0; block < n; ++block) {
    if (block >= next_number) {
      for (std::size_t q = 0; q < n; ++q) {
        if (((numbered >> q) & 1U) == 0) {
          throw ValidationError("canonical_from_dfa: state " + std::to_string(q) +
                                " is unreachable from state " + std::to_string(start));
        }
      }
    }
    const std::size_t q = by_number[block];
    for (std::size_t i = 0; i < k; ++i) {
      const std::size_t t = table[q * k + order[i]];
      if (((numbered >> t) & 1U) == 0) {
        numbered |= std::uint64_t{1} << t;
        number[t] = static_cast<std::uint8_t>(next_number);
        by_number[next_number++] = static_cast<std::uint8_t>(t);
      }
      out[pos++] = number[t];
    }
  }
  return out;
}

std::vector<std::vector<Letter>> letter_orders(std::size_t k) {
  if (k > kMaxCanonicalLetters) {
    throw ValidationError("canonical form: at most " + std::to_string(kMaxCanonicalLetters) + " letters supported");
  }
  std::vector<Letter> order(k);
  std::iota(order.begin(), order.end(), 0U);
  std::vector<std::vector<Letter>> all;
  do {
    all.push_back(order);
  } while (std::next_permutation(order.begin(), order.end()));
  return all;
}

}  // namespace

std::string CanonicalString::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    if (i != 0) out += ',';
    out += std::to_string(symbols[i]);
  }
  return out + "]";
}

CanonicalString CanonicalString::parse(std::string_view text, std::size_t states, std::size_t letters) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.size() < 2 || text.front() != '[' || text.back() != ']') {
    throw ValidationError("canonical string: expected \"[s0,s1,...]\"");
  }
  text = text.substr(1, text.size() - 2);
  CanonicalString out{states, letters, {}};
  while (!trim(text).empty()) {
    const std::size_t comma = text.find(',');
    const std::string_view field = trim(text.substr(0, comma));
    unsigned value = 0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc() || ptr != field.data() + field.size()) {
      throw ValidationError("canonical string: bad symbol \"" + std::string(field) + "\"");
    }
    out.symbols.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  if (out.symbols.size() != states * letters) {
    throw ValidationError("canonical string: length " + std::to_string(out.symbols.size()) + " != n*k = " +
                          std::to_string(states * letters));
  }
  for (const State v : out.symbols) {
    if (v >= states) throw ValidationError("canonical string: symbol " + std::to_string(v) + " out of range");
  }
  return out;
}

bool validate_canonical(const CanonicalString& s) {
  const std::size_t n = s.states;
  const std::size_t k = s.letters;
  if (s.symbols.size() != n * k) {
    throw ValidationError("canonical string: length " + std::to_string(s.symbols.size()) + " != n*k = " +
                          std::to_string(n * k));
  }
  std::vector<std::size_t> first(n, s.symbols.size());
  for (std::size_t i = 0; i < s.symbols.size(); ++i) {
    if (s.symbols[i] >= n) throw ValidationError("canonical string: symbol out of range");
    first[s.symbols[i]] = std::min(first[s.symbols[i]], i);
  }
  for (std::size_t i = 0; i < s.symbols.size(); ++i) {
    const State v = s.symbols[i];
    if (v > 1 && first[v - 1] >= i) return false;
  }
  for (std::size_t m = 1; m < n; ++m) {
    if (first[m] >= m * k) return false;
  }
  return true;
}

Dfa dfa_from_canonical(const CanonicalString& s) { return Dfa(s.states, s.letters, s.symbols); }

CanonicalString canonical_from_dfa(const Dfa& dfa, State start, std::span<const Letter> letter_order) {
  if (start >= dfa.states()) throw ValidationError("canonical_from_dfa: start state out of range");
  std::vector<bool> used(dfa.letters(), false);
  if (letter_order.size() != dfa.letters()) throw ValidationError("canonical_from_dfa: bad letter order");
  for (Letter a : letter_order) {
    if (a >= dfa.letters() || used[a]) throw ValidationError("canonical_from_dfa: bad letter order");
    used[a] = true;
  }
  const auto symbols = encoding(dfa.table(), dfa.states(), dfa.letters(), start, letter_order);
  return {dfa.states(), dfa.letters(), std::vector<State>(symbols.begin(), symbols.end())};
}

CanonicalString canonical_from_dfa(const Dfa& dfa, State start) {
  std::vector<Letter> order(dfa.letters());
  std::iota(order.begin(), order.end(), 0U);
  return canonical_from_dfa(dfa, start, order);
}

CanonicalString iso_canonical_form(const Dfa& dfa) {
  const std::size_t n = dfa.states();
  const std::size_t k = dfa.letters();
  const auto reach = reach_masks(dfa.table(), n, k);
  const std::uint64_t all = dfa.all_states().bits();
  std::vector<std::uint8_t> best;
  for (const auto& order : letter_orders(k)) {
    for (std::size_t q = 0; q < n; ++q) {
      if (reach[q] != all) continue;
      if (best.empty()) {
        best = encoding(dfa.table(), n, k, q, order);
      } else if (compare_encoding(dfa.table(), n, k, q, order, best) < 0) {
        best = encoding(dfa.table(), n, k, q, order);
      }
    }
  }
  if (best.empty()) throw ValidationError("iso_canonical_form: no state reaches every other state");
  return {n, k, std::vector<State>(best.begin(), best.end())};
}

bool is_iso_self_canonical(std::span<const std::uint8_t> symbols, std::size_t n, std::size_t k) {
  static thread_local std::size_t cached_k = 0;
  static thread_local std::vector<std::vector<Letter>> orders;
  if (cached_k != k) {
    orders = letter_orders(k);
    cached_k = k;
  }
  const auto reach = reach_masks(symbols, n, k);
  const std::uint64_t all = StateSet::full(n).bits();
  for (std::size_t o = 0; o < orders.size(); ++o) {
    for (std::size_t q = 0; q < n; ++q) {
      if ((q == 0 && o == 0) || reach[q] != all) continue;
      if (compare_encoding(symbols, n, k, q, orders[o], symbols) < 0) return false;
    }
  }
  return true;
}

Shard parse_shard(std::string_view text) {
  const std::size_t slash = text.find('/');
  if (slash == std::string_view::npos) throw ValidationError("shard: expected \"i/m\"");
  Shard shard;
  const auto parse = [](std::string_view part, std::size_t& out) {
    const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), out);
    return ec == std::errc() && ptr == part.data() + part.size();
  };
  if (!parse(text.substr(0, slash), shard.index) || !parse(text.substr(slash + 1), shard.count) ||
      shard.count == 0 || shard.index >= shard.count) {
    throw ValidationError("shard: expected \"i/m\" with 0 <= i < m");
  }
  return shard;
}

CanonicalEnumerator::CanonicalEnumerator(std::size_t n, std::size_t k, Shard shard)
    : n_(n), k_(k), shard_(shard), key_length_(shard_key_length(n, k)), symbols_(n * k) {
  if (n == 0 || n > 255 || k == 0) throw ValidationError("enumeration: need 1 <= n <= 255 and k >= 1");
  if (shard.count == 0 || shard.index >= shard.count) throw ValidationError("enumeration: bad shard");
}

bool CanonicalEnumerator::in_shard() const {
  std::uint64_t key = 0;
  for (std::size_t i = 0; i < key_length_; ++i) key = key * n_ + symbols_[i];
  return key % shard_.count == shard_.index;
}

bool CanonicalEnumerator::accept_prefix(std::span<const std::uint8_t> prefix, unsigned& max_seen) const {
  if (prefix.size() > n_ * k_) throw ValidationError("enumeration: prefix longer than the string");
  max_seen = 0;
  for (std::size_t pos = 0; pos < prefix.size(); ++pos) {
    const unsigned s = prefix[pos];
    if (s >= n_ || s > max_seen + 1) return false;
    max_seen = std::max(max_seen, s);
    if (max_seen + 1 < n_ && pos + 1 >= (max_seen + 1) * k_) return false;
  }
  if (prefix.size() >= key_length_ && shard_.count > 1) {
    std::uint64_t key = 0;
    for (std::size_t i = 0; i < key_length_; ++i) key = key * n_ + prefix[i];
    if (key % shard_.count != shard_.index) return false;
  }
  return true;
}

std::vector<std::vector<std::uint8_t>> CanonicalEnumerator::prefixes(std::size_t length) {
  length = std::min(length, n_ * k_);
  // Enumerate strings of the truncated problem by hand: a depth-limited
  // copy of descend that stops at `length`.
  std::vector<std::vector<std::uint8_t>> out;
  std::vector<std::uint8_t> current;
  auto recurse = [&](auto&& self, unsigned max_seen) -> void {
    const std::size_t pos = current.size();
    if (pos == length) {
      out.push_back(current);
      return;
    }
    const unsigned top = std::min<unsigned>(max_seen + 1, static_cast<unsigned>(n_ - 1));
    for (unsigned s = 0; s <= top; ++s) {
      const unsigned seen = std::max(max_seen, s);
      if (seen + 1 < n_ && pos + 1 >= (seen + 1) * k_) continue;
      current.push_back(static_cast<std::uint8_t>(s));
      unsigned ignored = 0;
      if (pos + 1 != key_length_ || accept_prefix(current, ignored)) self(self, seen);
      current.pop_back();
    }
  };
  recurse(recurse, 0);
  return out;
}

std::uint64_t count_canonical(std::size_t n, std::size_t k, Shard shard, std::size_t jobs) {
  CanonicalEnumerator probe(n, k, shard);
  const auto tasks = probe.prefixes(std::min(n * k, 3 * k));
  std::vector<std::uint64_t> counts(tasks.size(), 0);
  parallel_for(tasks.size(), jobs, [&](std::size_t i) {
    CanonicalEnumerator enumerator(n, k, shard);
    std::uint64_t local = 0;
    enumerator.run(tasks[i], [&](std::span<const std::uint8_t>) { ++local; });
    counts[i] = local;
  });
  return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
}

}  // namespace synchrolab
