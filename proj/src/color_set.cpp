#include "ryser/color_set.hpp"

namespace ryser {

ColorSet ColorSet::smallest(int k) const {
  ColorSet out;
  std::uint32_t rest = bits_;
  while (rest != 0 && k > 0) {
    std::uint32_t low = rest & (~rest + 1);
    out.bits_ |= low;
    rest &= ~low;
    --k;
  }
  return out;
}

std::vector<Color> ColorSet::colors() const {
  std::vector<Color> out;
  for (std::uint32_t rest = bits_; rest != 0; rest &= rest - 1) {
    out.push_back(std::countr_zero(rest) + 1);
  }
  return out;
}

std::string ColorSet::to_string() const {
  if (empty()) return "-";
  std::string out;
  for (Color c : colors()) {
    if (!out.empty()) out += ',';
    out += std::to_string(c);
  }
  return out;
}

}  // namespace ryser
