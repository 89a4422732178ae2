#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>

#include "burau4/weights.hpp"

namespace burau4 {

enum class Side : std::uint8_t { Left, Right };

struct PathStep {
  std::uint8_t rail;
  std::int8_t dir;  // +1 along the rail orientation, -1 against it

  friend constexpr bool operator==(PathStep, PathStep) = default;
};

struct CrossingTerm {
  std::int8_t sign;
  std::int8_t level;  // relative to the level when the path starts

  friend constexpr bool operator==(CrossingTerm, CrossingTerm) = default;
};

inline constexpr std::size_t kMaxPathLength = 16;
inline constexpr std::size_t kMaxCrossingTerms = 4;

/// What happens between one pass along rail 14 and the next.
///
/// Position on rail 14 is measured as the number of strands to the left of
/// the arc, facing the direction of travel. After taking the path it becomes
///   ell_sign * ell + sum_r weight_coefficients[r] * w[r] + constant.
/// Crossings are listed after removing bigons with the fixed arc.
struct PathRule {
  Side side = Side::Left;
  std::uint8_t symbol = 0;
  bool terminal = false;
  std::uint8_t path_length = 0;
  std::array<PathStep, kMaxPathLength> path{};
  std::int8_t ell_sign = 1;
  std::array<std::int8_t, kRailCount> weight_coefficients{};
  std::int8_t constant = 0;
  std::int8_t level_delta = 0;
  std::uint8_t crossing_terms = 0;
  std::array<CrossingTerm, kMaxCrossingTerms> crossings{};

  std::span<const PathStep> steps() const noexcept { return {path.data(), path_length}; }
  std::span<const CrossingTerm> terms() const noexcept { return {crossings.data(), crossing_terms}; }

  friend bool operator==(const PathRule&, const PathRule&) = default;
};

/// The frozen table used by the tracer, ordered left rules by symbol, then
/// right rules by symbol, then the terminal rule.
std::span<const PathRule> transition_table() noexcept;

/// Emits C++ initializers for a table, in the format of the frozen one.
std::string format_table_source(std::span<const PathRule> rules);

}  // namespace burau4
