#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace henson {

enum class Color : uint8_t { Red = 0, Blue = 1 };

constexpr Color opposite(Color c) {
  return c == Color::Red ? Color::Blue : Color::Red;
}

constexpr char color_char(Color c) { return c == Color::Red ? 'R' : 'B'; }

inline std::string color_name(Color c) { return c == Color::Red ? "red" : "blue"; }

inline Color parse_color(const std::string& s) {
  if (s == "red" || s == "R" || s == "r") return Color::Red;
  if (s == "blue" || s == "B" || s == "b") return Color::Blue;
  throw std::invalid_argument("unknown color: " + s);
}

}  // namespace henson
