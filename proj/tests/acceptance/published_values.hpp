#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "burau4/laurent.hpp"
#include "burau4/weights.hpp"

namespace acceptance {

/// Published values read out of the LaTeX source.
struct PublishedValues {
  /// level -> (minnorm, mult) for the first levels.
  std::map<std::int64_t, std::pair<std::int64_t, std::int64_t>> first_levels;

  /// The periodic pattern: range and the two-way case split by level mod 6.
  std::int64_t periodic_lo = 0, periodic_hi = 0;
  std::int64_t minnorm_if_zero_mod6 = 0, minnorm_otherwise = 0;
  std::int64_t mult_if_two_mod6 = 0, mult_otherwise = 0;

  /// Family with members base + m * step at level first_level + level_step * m.
  burau4::WeightTuple family_base, family_step;
  std::int64_t family_first_level = 0, family_level_step = 0;
  /// Terms (coefficient, exponent, exponent growth per m).
  std::vector<std::array<std::int64_t, 3>> family_terms;

  /// Number of minimum-norm families over the periodic band.
  std::int64_t family_count = 0;

  /// Two record lists of three members each, boxes removed.
  std::vector<std::vector<std::string>> record_families;

  burau4::LaurentPolynomial family_polynomial(std::int64_t m) const;
  std::int64_t periodic_minnorm(std::int64_t level) const;
  std::int64_t periodic_mult(std::int64_t level) const;
};

/// Throws std::runtime_error naming the first value that could not be found.
PublishedValues read_published_values(const std::string& path);

}  // namespace acceptance
