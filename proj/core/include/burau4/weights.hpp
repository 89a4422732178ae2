#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>

namespace burau4 {

/// The five free rail weights (w0, w1, w2, w3, w14) of a curve carried by the
/// universal track. Everything else follows from the switch equations.
struct WeightTuple {
  std::int64_t w0 = 0;
  std::int64_t w1 = 0;
  std::int64_t w2 = 0;
  std::int64_t w3 = 0;
  std::int64_t w14 = 0;

  friend auto operator<=>(const WeightTuple&, const WeightTuple&) = default;

  WeightTuple operator+(const WeightTuple& o) const {
    return {w0 + o.w0, w1 + o.w1, w2 + o.w2, w3 + o.w3, w14 + o.w14};
  }
  WeightTuple operator-(const WeightTuple& o) const {
    return {w0 - o.w0, w1 - o.w1, w2 - o.w2, w3 - o.w3, w14 - o.w14};
  }
  WeightTuple operator*(std::int64_t k) const { return {w0 * k, w1 * k, w2 * k, w3 * k, w14 * k}; }

  bool is_zero() const { return w0 == 0 && w1 == 0 && w2 == 0 && w3 == 0 && w14 == 0; }
  bool nonnegative() const { return w0 >= 0 && w1 >= 0 && w2 >= 0 && w3 >= 0 && w14 >= 0; }
};

inline constexpr std::size_t kRailCount = 15;

/// Weights on all fifteen rails, indexed by rail number.
using RailWeights = std::array<std::int64_t, kRailCount>;

/// Applies the switch equations. Throws OddHalf if w14 is odd and
/// DerivedNegative if any of w8..w13 comes out negative.
RailWeights derive_weights(const WeightTuple& t);

/// Same as derive_weights but reports failure as nullopt.
std::optional<RailWeights> try_derive_weights(const WeightTuple& t) noexcept;

/// True iff every switch condition of the track holds for w.
bool satisfies_switch_conditions(const RailWeights& w) noexcept;

/// "(w0,w1,w2,w3,w14)".
std::string to_string(const WeightTuple& t);

/// Accepts "(a,b,c,d,e)", "a,b,c,d,e" or whitespace separated integers.
WeightTuple parse_tuple(const std::string& text);

struct WeightTupleHash {
  std::size_t operator()(const WeightTuple& t) const noexcept {
    std::uint64_t h = 1469598103934665603ULL;
    for (auto v : {t.w0, t.w1, t.w2, t.w3, t.w14}) {
      h ^= static_cast<std::uint64_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace burau4
