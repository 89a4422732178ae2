#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "burau4/weights.hpp"

namespace burau4 {

/// Which of w8, w9, w12 vanish. At least one must for the curve to avoid a
/// loop parallel to the whole track.
struct CaseSet {
  bool case1 = false;  // w8 = 0, i.e. w14/2 = w0 + w1
  bool case2 = false;  // w9 = 0, i.e. w14/2 = w0 - w1
  bool case3 = false;  // w12 = 0, i.e. w14/2 = w2 + w3

  bool any() const noexcept { return case1 || case2 || case3; }
  friend bool operator==(const CaseSet&, const CaseSet&) = default;
};

/// D1-D4 (w0, w1 even; w2, w3 odd) plus w14 even.
bool check_divisibility(const WeightTuple& t) noexcept;
/// N1-N6: w8..w13 are nonnegative.
bool check_nonnegativity(const WeightTuple& t) noexcept;
/// I1-I3: the arc leaves p3 along rail 6 then rail 11 and meets the fixed
/// arc essentially.
bool check_initial(const WeightTuple& t) noexcept;
/// T1-T4: the mirror-image conditions at p4.
bool check_terminal(const WeightTuple& t) noexcept;

CaseSet case_set(const WeightTuple& t) noexcept;
/// Throws NoZeroWeight if none of w8, w9, w12 vanishes.
CaseSet classify_cases(const WeightTuple& t);

/// The condition lists after substituting one case equation. `which` is 1, 2
/// or 3; w14 is ignored and implied by the case equation. Equivalent to the
/// general lists on the case hyperplane.
bool check_case_conditions(const WeightTuple& t, int which) noexcept;

/// Number of essential intersections w0/2 + w1/2 - min(w1, w8). Meaningful
/// for admissible tuples.
std::int64_t crossing_count(const WeightTuple& t) noexcept;

/// Divisibility, nonnegativity, initial, terminal, gcd(w0..w3) = 1, and some
/// case equation holds. Proper multicurves can still pass.
bool is_admissible(const WeightTuple& t) noexcept;

/// Even values of w0 that can occur at the given crossing count. Each value
/// names one independently enumerable partition of the level.
std::vector<std::int64_t> level_partitions(std::int64_t crossings);

/// Every admissible tuple with the given w0 and crossing count, in
/// lexicographic order without repeats.
std::vector<WeightTuple> enumerate_partition(std::int64_t crossings, std::int64_t w0);

/// Every admissible tuple with the given crossing count in lexicographic
/// order. `crossings` must be even and positive.
std::vector<WeightTuple> enumerate_level(std::int64_t crossings);

/// Streaming form of enumerate_level.
void enumerate_level(std::int64_t crossings, const std::function<void(const WeightTuple&)>& sink);

}  // namespace burau4
