#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <iterator>

namespace synchrolab {

using State = std::uint32_t;
using Letter = std::uint32_t;

// Fixed-capacity subset of {0, ..., 63} packed into one machine word.
class StateSet {
 public:
  static constexpr std::size_t kCapacity = 64;

  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = State;
    using difference_type = std::ptrdiff_t;
    using pointer = const State*;
    using reference = State;

    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}

    constexpr State operator*() const { return static_cast<State>(std::countr_zero(rest_)); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    constexpr bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr StateSet() = default;

  static constexpr StateSet from_bits(std::uint64_t bits) {
    StateSet s;
    s.bits_ = bits;
    return s;
  }
  static constexpr StateSet full(std::size_t n) {
    return from_bits(n >= kCapacity ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static constexpr StateSet singleton(State q) { return from_bits(std::uint64_t{1} << q); }

  constexpr bool contains(State q) const { return q < kCapacity && ((bits_ >> q) & 1U) != 0; }
  constexpr void insert(State q) { bits_ |= std::uint64_t{1} << q; }
  constexpr void erase(State q) { bits_ &= ~(std::uint64_t{1} << q); }

  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool is_singleton() const { return bits_ != 0 && (bits_ & (bits_ - 1)) == 0; }
  constexpr std::uint64_t bits() const { return bits_; }

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  friend constexpr StateSet operator|(StateSet a, StateSet b) { return from_bits(a.bits_ | b.bits_); }
  friend constexpr StateSet operator&(StateSet a, StateSet b) { return from_bits(a.bits_ & b.bits_); }
  constexpr bool is_subset_of(StateSet other) const { return (bits_ & ~other.bits_) == 0; }

  constexpr bool operator==(const StateSet&) const = default;
  constexpr auto operator<=>(const StateSet&) const = default;

 private:
  std::uint64_t bits_ = 0;
};

}  // namespace synchrolab
