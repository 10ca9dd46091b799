#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <vector>

#include "bergeham/core/errors.hpp"

namespace bergeham {

// Largest supported vertex count; every vertex or position set fits one word.
inline constexpr std::size_t kMaxVertices = 63;

// A set of small indices (0..63) packed into one machine word. The tag keeps
// vertex-id sets and path-position sets from being mixed up.
template <class Tag>
class BitSet64 {
 public:
  using value_type = std::size_t;

  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = std::size_t;
    using difference_type = std::ptrdiff_t;
    using pointer = void;
    using reference = std::size_t;

    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}

    constexpr std::size_t operator*() const {
      return static_cast<std::size_t>(std::countr_zero(rest_));
    }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      auto copy = *this;
      ++*this;
      return copy;
    }
    constexpr bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr BitSet64() = default;
  constexpr explicit BitSet64(std::uint64_t bits) : bits_(bits) {}

  static constexpr BitSet64 of(std::initializer_list<std::size_t> items) {
    BitSet64 s;
    for (auto i : items) s.insert(i);
    return s;
  }

  template <class Range>
  static constexpr BitSet64 from_range(const Range& items) {
    BitSet64 s;
    for (auto i : items) s.insert(static_cast<std::size_t>(i));
    return s;
  }

  // Half-open range [lo, hi).
  static constexpr BitSet64 interval(std::size_t lo, std::size_t hi) {
    if (hi <= lo) return {};
    const std::uint64_t upper = hi >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << hi) - 1;
    const std::uint64_t lower = (std::uint64_t{1} << lo) - 1;
    return BitSet64(upper & ~lower);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool empty() const { return bits_ == 0; }

  constexpr bool contains(std::size_t i) const { return i < 64 && ((bits_ >> i) & 1U) != 0; }

  constexpr void insert(std::size_t i) {
    if (i >= 64) throw DomainError("index " + std::to_string(i) + " does not fit a 64-bit set");
    bits_ |= std::uint64_t{1} << i;
  }
  constexpr void erase(std::size_t i) {
    if (i < 64) bits_ &= ~(std::uint64_t{1} << i);
  }

  // Smallest member; undefined on the empty set.
  constexpr std::size_t front() const { return static_cast<std::size_t>(std::countr_zero(bits_)); }
  constexpr std::size_t back() const { return static_cast<std::size_t>(63 - std::countl_zero(bits_)); }

  constexpr bool subset_of(BitSet64 other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(BitSet64 other) const { return (bits_ & other.bits_) != 0; }

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<std::size_t> to_vector() const { return {begin(), end()}; }

  constexpr BitSet64& operator|=(BitSet64 o) { bits_ |= o.bits_; return *this; }
  constexpr BitSet64& operator&=(BitSet64 o) { bits_ &= o.bits_; return *this; }
  constexpr BitSet64& operator-=(BitSet64 o) { bits_ &= ~o.bits_; return *this; }

  friend constexpr BitSet64 operator|(BitSet64 a, BitSet64 b) { return BitSet64(a.bits_ | b.bits_); }
  friend constexpr BitSet64 operator&(BitSet64 a, BitSet64 b) { return BitSet64(a.bits_ & b.bits_); }
  friend constexpr BitSet64 operator-(BitSet64 a, BitSet64 b) { return BitSet64(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(BitSet64, BitSet64) = default;

 private:
  std::uint64_t bits_ = 0;
};

using VertexSet = BitSet64<struct VertexSetTag>;
// 1-based positions along a Berge path.
using PositionSet = BitSet64<struct PositionSetTag>;

// Calls fn(subset) for every `size`-element subset of `ground`, in increasing
// order of the packed word (which is colexicographic order on the members).
template <class Tag, class Fn>
void for_each_subset(BitSet64<Tag> ground, std::size_t size, Fn&& fn) {
  const auto members = ground.to_vector();
  const std::size_t m = members.size();
  if (size > m) return;
  if (size == 0) {
    fn(BitSet64<Tag>{});
    return;
  }
  // Gosper's hack over local indices, then scatter onto the ground members.
  std::uint64_t local = (std::uint64_t{1} << size) - 1;
  const std::uint64_t limit = m >= 64 ? 0 : (std::uint64_t{1} << m);
  while (true) {
    BitSet64<Tag> subset;
    for (std::uint64_t rest = local; rest != 0; rest &= rest - 1)
      subset.insert(members[static_cast<std::size_t>(std::countr_zero(rest))]);
    fn(subset);
    const std::uint64_t low = local & (~local + 1);
    const std::uint64_t ripple = local + low;
    if (ripple == 0) break;
    local = (((ripple ^ local) >> 2) / low) | ripple;
    if (limit != 0 && local >= limit) break;
  }
}

}  // namespace bergeham
