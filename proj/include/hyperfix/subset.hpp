#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <vector>

namespace hyperfix {

/// A subset of a finite carrier {0, ..., n-1} with n <= 64, stored as a bitmask.
class Subset {
public:
  static constexpr std::size_t max_size = 64;

  constexpr Subset() = default;
  constexpr explicit Subset(std::uint64_t bits) : bits_(bits) {}

  static constexpr Subset full(std::size_t n) {
    return Subset(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static constexpr Subset single(std::size_t i) { return Subset(std::uint64_t{1} << i); }

  template <class Range>
  static Subset of(const Range& elements) {
    Subset s;
    for (auto e : elements) s.insert(static_cast<std::size_t>(e));
    return s;
  }

  constexpr std::uint64_t bits() const noexcept { return bits_; }
  constexpr bool contains(std::size_t i) const noexcept { return (bits_ >> i) & 1U; }
  constexpr void insert(std::size_t i) noexcept { bits_ |= std::uint64_t{1} << i; }
  constexpr void erase(std::size_t i) noexcept { bits_ &= ~(std::uint64_t{1} << i); }
  constexpr bool empty() const noexcept { return bits_ == 0; }
  constexpr std::size_t size() const noexcept { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool subset_of(Subset other) const noexcept { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(Subset other) const noexcept { return (bits_ & other.bits_) != 0; }

  /// Smallest element; undefined on the empty set.
  constexpr std::size_t first() const noexcept { return static_cast<std::size_t>(std::countr_zero(bits_)); }

  template <class F>
  constexpr void for_each(F&& f) const {
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) f(static_cast<std::size_t>(std::countr_zero(b)));
  }

  std::vector<std::size_t> elements() const {
    std::vector<std::size_t> out;
    out.reserve(size());
    for_each([&](std::size_t i) { out.push_back(i); });
    return out;
  }

  constexpr Subset operator&(Subset o) const noexcept { return Subset(bits_ & o.bits_); }
  constexpr Subset operator|(Subset o) const noexcept { return Subset(bits_ | o.bits_); }
  constexpr Subset minus(Subset o) const noexcept { return Subset(bits_ & ~o.bits_); }
  constexpr Subset& operator&=(Subset o) noexcept { bits_ &= o.bits_; return *this; }
  constexpr Subset& operator|=(Subset o) noexcept { bits_ |= o.bits_; return *this; }

  friend constexpr bool operator==(Subset, Subset) = default;
  friend constexpr auto operator<=>(Subset, Subset) = default;

private:
  std::uint64_t bits_ = 0;
};

/// Lexicographic order of the sorted element lists ({0} < {0,1} < {1}).
inline bool lex_less(Subset a, Subset b) {
  const auto ea = a.elements();
  const auto eb = b.elements();
  return std::lexicographical_compare(ea.begin(), ea.end(), eb.begin(), eb.end());
}

}  // namespace hyperfix
