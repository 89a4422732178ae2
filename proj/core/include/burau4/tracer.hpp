#pragma once

#include <array>
#include <cstdint>
#include <string_view>
#include <vector>

#include "burau4/outcome.hpp"
#include "burau4/transition_table.hpp"
#include "burau4/weights.hpp"

namespace burau4 {

inline constexpr int kDefaultScreenBits = 7;
inline constexpr int kMaxScreenBits = 16;

using LeftThresholds = std::array<std::int64_t, 8>;
using RightThresholds = std::array<std::int64_t, 5>;

LeftThresholds left_thresholds(const RailWeights& w) noexcept;
RightThresholds right_thresholds(const RailWeights& w) noexcept;

/// 1-based position of the first entry that ell is below. The left list
/// answers 9 when ell is not below any entry, the right list answers 6.
int left_symbol(const LeftThresholds& list, std::int64_t ell) noexcept;
int right_symbol(const RightThresholds& list, std::int64_t ell) noexcept;

/// True when a rightward pass at ell runs into the fourth puncture.
bool is_terminal_position(const RailWeights& w, std::int64_t ell) noexcept;

struct TraceState {
  std::int64_t ell = 0;
  std::int64_t level = 0;
  Side direction = Side::Left;
  std::int64_t steps = 0;
  std::int64_t crossings = 0;
  bool finished = false;
  ArcRecord record;
};

/// The accumulator a single step writes into. Exponents are absolute
/// levels; the callee decides how to store them.
class CrossingSink {
 public:
  virtual ~CrossingSink() = default;
  virtual void add(std::int64_t level, int sign) = 0;
};

/// Starting state for an admissible tuple: leftward with ell = w2.
TraceState initial_state(const WeightTuple& t);

/// One pass along rail 14 and the path that follows it. Throws LeftOverflow
/// if ell exceeds w14 on a leftward pass.
void step(TraceState& state, const RailWeights& w, CrossingSink& sink);

/// Limit on passes along rail 14 before the trace is declared stuck.
std::int64_t step_budget(const WeightTuple& t) noexcept;

struct TraceOptions {
  TraceMode mode = TraceMode::Exact;
  int screen_bits = kDefaultScreenBits;
  bool keep_record = true;
};

/// Classifies the tuple and, in exact mode, computes its polynomial.
/// Non-admissible tuples are reported, never thrown.
TraceOutcome trace(const WeightTuple& t, const TraceOptions& options = {});

inline TraceOutcome trace_exact(const WeightTuple& t) { return trace(t, {}); }
inline TraceOutcome trace_preliminary(const WeightTuple& t, int bits = kDefaultScreenBits) {
  return trace(t, {TraceMode::Preliminary, bits, true});
}

enum class ScreenResult { DefinitelyNonzero, PossiblyZero, ProperMulticurve };

std::string_view to_string(ScreenResult r) noexcept;

/// Preliminary trace reduced to its verdict. Throws PreconditionViolated if
/// the tuple is not admissible.
ScreenResult screen_zero(const WeightTuple& t, int bits = kDefaultScreenBits);

/// Coefficients of p with exponents reduced mod 2^bits.
std::vector<std::int64_t> reduce_mod_power_of_two(const LaurentPolynomial& p, int bits);

/// Lightweight result used by the sweeps: no record, no exact polynomial.
struct Screening {
  TraceStatus status = TraceStatus::NonAdmissible;
  std::int64_t crossings = 0;
  /// Sum of |residue|; a lower bound for the exact norm.
  std::int64_t residue_norm = 0;
  /// Passes along rail 14.
  std::int64_t passes = 0;
};

Screening screen(const WeightTuple& t, int bits = kDefaultScreenBits);

}  // namespace burau4
