#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace ryser {

// Colors are 1-based, as in [r] = {1, ..., r}.
using Color = int;

inline constexpr int kMaxColors = 30;

// Set of colors stored as a bit mask; bit (c - 1) holds color c.
class ColorSet {
 public:
  constexpr ColorSet() = default;
  constexpr explicit ColorSet(std::uint32_t bits) : bits_(bits) {}

  static constexpr ColorSet single(Color c) { return ColorSet(std::uint32_t{1} << (c - 1)); }
  // [r]
  static constexpr ColorSet range(int r) {
    return ColorSet(r >= 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << r) - 1);
  }
  static ColorSet of(std::initializer_list<Color> colors) {
    ColorSet s;
    for (Color c : colors) s.insert(c);
    return s;
  }
  static ColorSet of(const std::vector<Color>& colors) {
    ColorSet s;
    for (Color c : colors) s.insert(c);
    return s;
  }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(Color c) const { return (bits_ >> (c - 1)) & 1u; }
  constexpr bool subset_of(ColorSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr Color min() const { return std::countr_zero(bits_) + 1; }
  constexpr Color max() const { return 32 - std::countl_zero(bits_); }

  constexpr void insert(Color c) { bits_ |= std::uint32_t{1} << (c - 1); }
  constexpr void erase(Color c) { bits_ &= ~(std::uint32_t{1} << (c - 1)); }

  // The k smallest colors of this set (all of them if k >= size()).
  ColorSet smallest(int k) const;
  std::vector<Color> colors() const;
  // "1,2,5"; "-" for the empty set.
  std::string to_string() const;

  friend constexpr ColorSet operator|(ColorSet a, ColorSet b) { return ColorSet(a.bits_ | b.bits_); }
  friend constexpr ColorSet operator&(ColorSet a, ColorSet b) { return ColorSet(a.bits_ & b.bits_); }
  friend constexpr ColorSet operator-(ColorSet a, ColorSet b) { return ColorSet(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(ColorSet a, ColorSet b) = default;

 private:
  std::uint32_t bits_ = 0;
};

}  // namespace ryser
