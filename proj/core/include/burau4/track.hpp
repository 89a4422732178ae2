#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string_view>

#include "burau4/weights.hpp"

namespace burau4 {

// Combinatorics of the universal track in the four-punctured disk.
//
// Rails 0..3 are loops around punctures p1..p4, each hanging from a cusp at
// the bottom of its stem (rails 4..7). Stems 4 and 5 enter the left trigon
// at corners A and B, stems 6 and 7 enter the right trigon at D and E. The
// left trigon has sides 8 = AB, 9 = BC, 10 = AC; the right one has sides
// 11 = DF, 12 = DE, 13 = FE. Rail 14 joins the top corners C and F.
//
// Rails are oriented: stems point away from their loop, trigon sides run as
// named above, rail 14 runs C -> F, and each loop leaves its cusp on the
// east side and runs clockwise around its puncture.

enum class End : std::uint8_t { Tail = 0, Head = 1 };

struct RailEnd {
  std::uint8_t rail;
  End end;

  friend constexpr bool operator==(RailEnd, RailEnd) = default;
};

enum class SwitchRole : std::uint8_t { Stem, Left, Right };

/// A trivalent switch. Left and right are taken facing the direction of
/// travel from the stem into the branches.
struct Switch {
  std::string_view name;
  RailEnd stem;
  RailEnd left;
  RailEnd right;
};

inline constexpr std::size_t kSwitchCount = 10;

inline constexpr std::array<Switch, kSwitchCount> kSwitches{{
    {"L0", {4, End::Tail}, {0, End::Tail}, {0, End::Head}},
    {"L1", {5, End::Tail}, {1, End::Tail}, {1, End::Head}},
    {"L2", {6, End::Tail}, {2, End::Tail}, {2, End::Head}},
    {"L3", {7, End::Tail}, {3, End::Tail}, {3, End::Head}},
    {"A", {4, End::Head}, {10, End::Tail}, {8, End::Tail}},
    {"B", {5, End::Head}, {8, End::Head}, {9, End::Tail}},
    {"C", {14, End::Tail}, {9, End::Head}, {10, End::Head}},
    {"F", {14, End::Head}, {13, End::Tail}, {11, End::Head}},
    {"D", {6, End::Head}, {11, End::Tail}, {12, End::Tail}},
    {"E", {7, End::Head}, {12, End::Head}, {13, End::Head}},
}};

inline constexpr std::size_t kStartSwitch = 2;  // cusp of the loop around p3
inline constexpr std::size_t kEndSwitch = 3;    // cusp of the loop around p4

struct Incidence {
  std::uint8_t sw;
  SwitchRole role;
};

/// The switch and role at a given rail end.
Incidence incidence(RailEnd e) noexcept;

constexpr bool is_loop(int rail) noexcept { return rail >= 0 && rail < 4; }

/// Something a loop meets between its ends: either the fixed arc (value is
/// the crossing sign) or the cut from its puncture down to the boundary
/// (value is the change of cover level). Both given for forward travel; the
/// parameter runs 0..1 from tail to head.
struct LoopEvent {
  double param;
  bool fixed_arc;
  int value;
};

std::span<const LoopEvent> loop_events(int loop) noexcept;

}  // namespace burau4
