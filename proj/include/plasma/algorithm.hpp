#pragma once

#include <optional>
#include <string_view>

namespace plasma {

enum class Algorithm { Bilinear, Bicubic, DiamondSquare, MidpointRecursive };

constexpr std::string_view to_string(Algorithm a) noexcept {
  switch (a) {
    case Algorithm::Bilinear: return "bilinear";
    case Algorithm::Bicubic: return "bicubic";
    case Algorithm::DiamondSquare: return "diamond-square";
    case Algorithm::MidpointRecursive: return "midpoint";
  }
  return "?";
}

constexpr std::optional<Algorithm> parse_algorithm(std::string_view s) noexcept {
  if (s == "bilinear") return Algorithm::Bilinear;
  if (s == "bicubic") return Algorithm::Bicubic;
  if (s == "diamond-square") return Algorithm::DiamondSquare;
  if (s == "midpoint" || s == "midpoint-recursive") return Algorithm::MidpointRecursive;
  return std::nullopt;
}

}  // namespace plasma
