#include "burau4/admissibility.hpp"

#include <algorithm>
#include <numeric>

#include "burau4/error.hpp"

namespace burau4 {

// All comparisons involving w14/2 are doubled so odd w14 never truncates.

bool check_divisibility(const WeightTuple& t) noexcept {
  return t.w0 % 2 == 0 && t.w1 % 2 == 0 && t.w2 % 2 != 0 && t.w3 % 2 != 0 && t.w14 % 2 == 0;
}

bool check_nonnegativity(const WeightTuple& t) noexcept {
  const auto [w0, w1, w2, w3, W] = t;
  return W <= 2 * (w0 + w1) && 2 * w0 <= 2 * w1 + W && 2 * w1 <= 2 * w0 + W &&
         2 * w3 <= 2 * w2 + W && W <= 2 * (w2 + w3) && 2 * w2 <= 2 * w3 + W;
}

bool check_initial(const WeightTuple& t) noexcept {
  const auto [w0, w1, w2, w3, W] = t;
  const bool i1 = 2 * w3 < W;
  const bool i2 = (2 * w1 + W < 2 * (w0 + w2)) || (w1 < w2);
  const bool i3 = (2 * (w0 + w2) < 2 * w1 + W) || (w0 + w2 < W) ||
                  (2 * (w0 + w1 + w2) < 3 * W) || (w1 + w2 < W);
  return i1 && i2 && i3;
}

bool check_terminal(const WeightTuple& t) noexcept {
  const auto [w0, w1, w2, w3, W] = t;
  const bool t1 = 2 * w2 < W;
  const bool t2 = 2 * (w1 + w3) < 2 * w0 + W;
  const bool t3 = w3 < w0;
  const bool t4 = (2 * (w0 + w1) < 2 * w3 + W) || (w1 < w3);
  return t1 && t2 && t3 && t4;
}

CaseSet case_set(const WeightTuple& t) noexcept {
  return {t.w14 == 2 * (t.w0 + t.w1), t.w14 == 2 * (t.w0 - t.w1), t.w14 == 2 * (t.w2 + t.w3)};
}

CaseSet classify_cases(const WeightTuple& t) {
  auto cs = case_set(t);
  if (!cs.any()) throw Error(ErrorCode::NoZeroWeight, "none of w8, w9, w12 is zero for " + to_string(t));
  return cs;
}

bool check_case_conditions(const WeightTuple& t, int which) noexcept {
  if (!(t.w0 % 2 == 0 && t.w1 % 2 == 0 && t.w2 % 2 != 0 && t.w3 % 2 != 0)) return false;
  const auto [w0, w1, w2, w3, W] = t;
  (void)W;
  switch (which) {
    case 1:
      if (w0 + w1 < 0) return false;
      return w0 + w1 <= w2 + w3 && w1 < w2 && w2 < w0 + w1 && w3 < w0;
    case 2:
      // The printed list for this case is misprinted; this is the reduction
      // of the general lists under w14/2 = w0 - w1.
      if (w0 - w1 < 0) return false;
      return w0 <= w1 + w2 + w3 && w1 + w3 < w0 && w1 + w2 < w0 && w1 < w3;
    case 3:
      return w2 + w3 <= w0 + w1 && w0 <= w1 + w2 + w3 && (w1 + w3 < w0 || w1 < w2) &&
             (w0 < w1 + w3 || w2 + 2 * w3 < w0 || w0 + w1 < 2 * w2 + 3 * w3) && w1 < w2 + w0 &&
             w3 < w0 && (w0 + w1 < w2 + 2 * w3 || w1 < w3);
    default:
      return false;
  }
}

std::int64_t crossing_count(const WeightTuple& t) noexcept {
  const auto w8 = t.w0 + t.w1 - t.w14 / 2;
  return t.w0 / 2 + t.w1 / 2 - std::min(t.w1, w8);
}

bool is_admissible(const WeightTuple& t) noexcept {
  if (!t.nonnegative()) return false;
  if (!check_divisibility(t) || !check_nonnegativity(t) || !check_initial(t) ||
      !check_terminal(t)) {
    return false;
  }
  if (std::gcd(std::gcd(t.w0, t.w1), std::gcd(t.w2, t.w3)) != 1) return false;
  return case_set(t).any();
}

std::vector<std::int64_t> level_partitions(std::int64_t crossings) {
  std::vector<std::int64_t> out;
  if (crossings <= 0) return out;
  for (std::int64_t w0 = 0; w0 < 4 * crossings; w0 += 2) out.push_back(w0);
  return out;
}

// Bounds for a level c (all proved from the case-reduced conditions):
//   Case I:   w0 + w1 = 2c, w2 < 2c, w3 < w0.
//   Case II:  w0 = w1 + 2c, w1 < w3 < 2c, w2 < 2c.
//   Case III: either w8 >= w1 and w0 = w1 + 2c, or w8 < w1 and
//             w3 = c + (w0 + w1)/2 - w2; in both branches w1, w2, w3 < 2c.
// Hence w0 < 4c everywhere. The brute-force box test guards these.
std::vector<WeightTuple> enumerate_partition(std::int64_t c, std::int64_t w0) {
  std::vector<WeightTuple> out;
  if (c <= 0 || w0 < 0 || w0 % 2 != 0) return out;
  auto consider = [&](const WeightTuple& t) {
    if (is_admissible(t) && crossing_count(t) == c) out.push_back(t);
  };

  // Case I.
  if (const auto w1 = 2 * c - w0; w1 >= 0) {
    for (std::int64_t w2 = w1 + 1; w2 < 2 * c; w2 += 2) {
      const auto lo = std::max<std::int64_t>(1, 2 * c - w2);
      for (std::int64_t w3 = lo | 1; w3 < std::min(w0, 2 * c); w3 += 2) {
        consider({w0, w1, w2, w3, 4 * c});
      }
    }
  }
  // Case II, and Case III with w8 >= w1; both force w1 = w0 - 2c.
  if (const auto w1 = w0 - 2 * c; w1 >= 0) {
    for (std::int64_t w2 = 1; w2 < 2 * c; w2 += 2) {
      for (std::int64_t w3 = 1; w3 < 2 * c; w3 += 2) {
        consider({w0, w1, w2, w3, 2 * (w0 - w1)});
        if (w2 + w3 <= w0) consider({w0, w1, w2, w3, 2 * (w2 + w3)});
      }
    }
  }
  // Case III with w8 < w1.
  for (std::int64_t w1 = 2; w1 < 2 * c; w1 += 2) {
    for (std::int64_t w2 = 1; w2 < 2 * c; w2 += 2) {
      const auto w3 = c + (w0 + w1) / 2 - w2;
      if (w3 < 1 || w3 >= 2 * c || w3 % 2 == 0) continue;
      consider({w0, w1, w2, w3, 2 * (w2 + w3)});
    }
  }

  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<WeightTuple> enumerate_level(std::int64_t crossings) {
  std::vector<WeightTuple> out;
  enumerate_level(crossings, [&](const WeightTuple& t) { out.push_back(t); });
  return out;
}

void enumerate_level(std::int64_t crossings, const std::function<void(const WeightTuple&)>& sink) {
  if (crossings <= 0 || crossings % 2 != 0) {
    throw Error(ErrorCode::PreconditionViolated,
                "level must be even and positive, got " + std::to_string(crossings));
  }
  for (auto w0 : level_partitions(crossings)) {
    for (const auto& t : enumerate_partition(crossings, w0)) sink(t);
  }
}

}  // namespace burau4
