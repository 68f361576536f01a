#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace tutte {

/// Subset of a ground set {0, ..., 63}, stored as a bit mask.
class ElementSet {
 public:
  static constexpr unsigned kCapacity = 64;

  constexpr ElementSet() = default;
  constexpr explicit ElementSet(std::uint64_t bits) : bits_(bits) {}
  ElementSet(std::initializer_list<unsigned> elements) {
    for (unsigned e : elements) bits_ |= std::uint64_t{1} << e;
  }

  static constexpr ElementSet full(unsigned n) {
    return ElementSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static constexpr ElementSet single(unsigned e) { return ElementSet(std::uint64_t{1} << e); }
  static ElementSet from(const std::vector<unsigned>& elements) {
    ElementSet s;
    for (unsigned e : elements) s.bits_ |= std::uint64_t{1} << e;
    return s;
  }

  constexpr std::uint64_t bits() const noexcept { return bits_; }
  constexpr unsigned size() const noexcept { return static_cast<unsigned>(std::popcount(bits_)); }
  constexpr bool empty() const noexcept { return bits_ == 0; }
  constexpr bool contains(unsigned e) const noexcept { return e < 64 && ((bits_ >> e) & 1U); }
  constexpr bool subset_of(ElementSet other) const noexcept { return (bits_ & ~other.bits_) == 0; }
  /// Largest element plus one; 0 for the empty set.
  constexpr unsigned bound() const noexcept {
    return bits_ == 0 ? 0 : 64U - static_cast<unsigned>(std::countl_zero(bits_));
  }
  constexpr unsigned min() const noexcept { return static_cast<unsigned>(std::countr_zero(bits_)); }

  constexpr ElementSet with(unsigned e) const noexcept { return ElementSet(bits_ | (std::uint64_t{1} << e)); }
  constexpr ElementSet without(unsigned e) const noexcept { return ElementSet(bits_ & ~(std::uint64_t{1} << e)); }

  friend constexpr ElementSet operator|(ElementSet a, ElementSet b) { return ElementSet(a.bits_ | b.bits_); }
  friend constexpr ElementSet operator&(ElementSet a, ElementSet b) { return ElementSet(a.bits_ & b.bits_); }
  friend constexpr ElementSet operator-(ElementSet a, ElementSet b) { return ElementSet(a.bits_ & ~b.bits_); }
  friend constexpr ElementSet operator^(ElementSet a, ElementSet b) { return ElementSet(a.bits_ ^ b.bits_); }
  ElementSet& operator|=(ElementSet o) { bits_ |= o.bits_; return *this; }
  ElementSet& operator&=(ElementSet o) { bits_ &= o.bits_; return *this; }
  ElementSet& operator-=(ElementSet o) { bits_ &= ~o.bits_; return *this; }
  friend constexpr bool operator==(ElementSet, ElementSet) = default;
  friend constexpr auto operator<=>(ElementSet a, ElementSet b) { return a.bits_ <=> b.bits_; }

  class iterator {
   public:
    using value_type = unsigned;
    using difference_type = std::ptrdiff_t;
    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr unsigned operator*() const { return static_cast<unsigned>(std::countr_zero(rest_)); }
    constexpr iterator& operator++() { rest_ &= rest_ - 1; return *this; }
    constexpr iterator operator++(int) { iterator t = *this; ++*this; return t; }
    friend constexpr bool operator==(iterator, iterator) = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<unsigned> to_vector() const {
    std::vector<unsigned> out;
    out.reserve(size());
    for (unsigned e : *this) out.push_back(e);
    return out;
  }

 private:
  std::uint64_t bits_ = 0;
};

struct ElementSetHash {
  std::size_t operator()(ElementSet s) const noexcept {
    std::uint64_t z = s.bits() + 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return static_cast<std::size_t>(z ^ (z >> 31));
  }
};

}  // namespace tutte
