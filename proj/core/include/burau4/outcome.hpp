#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "burau4/laurent.hpp"
#include "burau4/record.hpp"

namespace burau4 {

enum class TraceStatus { GenuineArc, ProperMulticurve, NonAdmissible };

std::string_view to_string(TraceStatus s) noexcept;

enum class TraceMode { Preliminary, Exact };

/// Result of tracing a weight tuple, by either the tracer or the oracle.
struct TraceOutcome {
  TraceStatus status = TraceStatus::NonAdmissible;
  TraceMode mode = TraceMode::Exact;
  /// Essential intersections of the traced arc with the fixed arc.
  std::int64_t crossings = 0;
  /// Present iff status is GenuineArc.
  std::optional<ArcRecord> record;
  /// Present iff status is GenuineArc and mode is Exact.
  std::optional<LaurentPolynomial> polynomial;
  /// Preliminary mode only: coefficients with exponents reduced mod 2^m.
  std::vector<std::int64_t> residues;

  /// The exact polynomial; throws ModeMisuse for preliminary outcomes and
  /// PreconditionViolated when the tuple is not a genuine arc.
  const LaurentPolynomial& exact_polynomial() const;
};

}  // namespace burau4
