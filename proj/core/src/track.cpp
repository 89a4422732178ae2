#include "burau4/track.hpp"

namespace burau4 {

namespace {

constexpr std::array<std::array<Incidence, 2>, kRailCount> build_incidence() {
  std::array<std::array<Incidence, 2>, kRailCount> out{};
  for (std::uint8_t s = 0; s < kSwitchCount; ++s) {
    const auto& sw = kSwitches[s];
    out[sw.stem.rail][static_cast<int>(sw.stem.end)] = {s, SwitchRole::Stem};
    out[sw.left.rail][static_cast<int>(sw.left.end)] = {s, SwitchRole::Left};
    out[sw.right.rail][static_cast<int>(sw.right.end)] = {s, SwitchRole::Right};
  }
  return out;
}

constexpr auto kIncidence = build_incidence();

// The fixed arc runs from p1 to p2, so it meets the loop around p1 on its
// east side and the loop around p2 on its west side. Cuts hang straight down
// from each puncture, and every loop passes under its puncture heading west.
constexpr std::array<LoopEvent, 2> kLoop0{{{0.25, true, -1}, {0.5, false, 1}}};
constexpr std::array<LoopEvent, 2> kLoop1{{{0.5, false, 1}, {0.75, true, 1}}};
constexpr std::array<LoopEvent, 1> kLoop2{{{0.5, false, 1}}};
constexpr std::array<LoopEvent, 1> kLoop3{{{0.5, false, 1}}};

}  // namespace

Incidence incidence(RailEnd e) noexcept { return kIncidence[e.rail][static_cast<int>(e.end)]; }

std::span<const LoopEvent> loop_events(int loop) noexcept {
  switch (loop) {
    case 0: return kLoop0;
    case 1: return kLoop1;
    case 2: return kLoop2;
    case 3: return kLoop3;
    default: return {};
  }
}

}  // namespace burau4
