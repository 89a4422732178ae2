#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "burau4/laurent.hpp"
#include "burau4/tracer.hpp"
#include "burau4/weights.hpp"

namespace burau4 {

/// Runs fn(0) .. fn(count - 1) on up to `workers` threads. Order of calls is
/// unspecified; fn must write only to its own slot.
void parallel_for(std::size_t count, int workers, const std::function<void(std::size_t)>& fn);

/// Worker count from BURAU4_WORKERS, or 1.
int default_worker_count();

struct SweepOptions {
  int screen_bits = kDefaultScreenBits;
  int workers = 1;
  /// Exact-trace and keep every genuine arc whose norm is at most this.
  /// Negative keeps none.
  std::int64_t keep_norm_cap = -1;
  /// Set from another thread to stop at the next partition boundary.
  const std::atomic<bool>* cancel = nullptr;
};

/// A genuine arc with its exact polynomial.
struct ArcSample {
  WeightTuple tuple;
  LaurentPolynomial polynomial;
  std::int64_t norm = 0;

  friend bool operator==(const ArcSample&, const ArcSample&) = default;
};

/// Running totals for one level. Folding partitions in increasing w0 order
/// makes the totals independent of how the partitions were scheduled.
struct LevelTally {
  std::int64_t level = 0;
  std::int64_t tuples = 0;
  std::int64_t genuine = 0;
  std::int64_t multicurves = 0;
  /// Genuine arcs whose residues all vanished and needed an exact trace.
  std::int64_t possibly_zero = 0;
  /// Genuine arcs with exact polynomial zero. Any entry refutes faithfulness.
  std::vector<WeightTuple> zeros;
  /// Smallest exact norm seen; -1 while no genuine arc has been seen.
  std::int64_t minnorm = -1;
  std::vector<WeightTuple> witnesses;
  /// Genuine arcs with norm <= keep_norm_cap, by tuple.
  std::vector<ArcSample> kept;

  void fold(const LevelTally& part);
  friend bool operator==(const LevelTally&, const LevelTally&) = default;
};

/// Screens every tuple of one partition (fixed w0) of a level.
LevelTally scan_partition(std::int64_t level, std::int64_t w0, const SweepOptions& options);

/// Called after each batch of partitions; `next_partition` is the index of
/// the first partition not yet folded into `tally`.
using PartitionProgress =
    std::function<void(const LevelTally& tally, std::size_t next_partition)>;

/// Screens a level, starting from a partial tally that already covers the
/// first `first_partition` partitions. Returns nullopt if cancelled.
std::optional<LevelTally> scan_level(std::int64_t level, const SweepOptions& options,
                                     LevelTally start = {}, std::size_t first_partition = 0,
                                     const PartitionProgress& progress = {});

/// Minimum norm and multiplicity at one level.
struct LevelStats {
  std::int64_t level = 0;
  std::int64_t minnorm = 0;
  std::int64_t mult = 0;
  std::vector<WeightTuple> witnesses;
  std::int64_t arcs_tested = 0;

  friend bool operator==(const LevelStats&, const LevelStats&) = default;
};

/// Throws EmptyLevel when the tally saw no genuine arc.
LevelStats stats_from_tally(const LevelTally& tally);

/// Throws EmptyLevel if no genuine arc has the given crossing count.
LevelStats level_stats(std::int64_t level, const SweepOptions& options = {});

struct CertificationReport {
  std::vector<LevelTally> levels;

  std::int64_t zero_count() const;
  std::int64_t arcs_tested() const;
};

/// Screens every level 2, 4, .., max_crossings. Zero polynomials are part of
/// the report, not errors.
CertificationReport certify_range(std::int64_t max_crossings, const SweepOptions& options = {});

struct PeriodicityViolation {
  std::int64_t level = 0;
  std::int64_t minnorm = 0;
  std::int64_t mult = 0;
  std::int64_t expected_minnorm = 0;
  std::int64_t expected_mult = 0;
};

/// The pattern minnorm = 10 / 8 and mult = 6 / 18 by level mod 6.
std::int64_t periodic_minnorm(std::int64_t level) noexcept;
std::int64_t periodic_mult(std::int64_t level) noexcept;

/// Checks the pattern over even levels in [lo, hi]; lo >= 44, hi <= 500.
std::vector<PeriodicityViolation> periodicity_check(std::int64_t lo, std::int64_t hi,
                                                    const SweepOptions& options = {});

enum class FamilyKind { TightlyKnit, LooselyKnit };

std::string_view to_string(FamilyKind k) noexcept;
FamilyKind parse_family_kind(std::string_view text);

/// What the family checks need from an exact trace.
struct ArcSummary {
  std::int64_t norm = 0;
  std::vector<std::int64_t> signature;
};

ArcSummary summarize(const LaurentPolynomial& p);

/// Exact traces shared by the family checks, keyed by tuple.
class ArcCache {
 public:
  /// Summary of a genuine arc; nullopt for anything else.
  const std::optional<ArcSummary>& summary(const WeightTuple& t);
  void insert(const WeightTuple& t, const LaurentPolynomial& p);
  std::size_t size() const noexcept { return map_.size(); }

 private:
  std::map<WeightTuple, std::optional<ArcSummary>> map_;
};

/// True iff base + i * step is a genuine arc for 0 <= i <= depth and each
/// member keeps the base's nonzero coefficient sequence (tight) or has norm
/// at least the base's norm (loose). Throws PreconditionViolated on a zero
/// step or depth < 1.
bool is_knit(const WeightTuple& base, const WeightTuple& step, std::int64_t depth,
             FamilyKind kind, ArcCache* cache = nullptr);

/// Number of consecutive members base + i * step, i = 1, 2, .., that pass
/// the same test, stopping at depth; -1 when the base is not a genuine arc.
std::int64_t knit_depth(const WeightTuple& base, const WeightTuple& step, std::int64_t depth,
                        FamilyKind kind, ArcCache* cache = nullptr);

inline bool is_tightly_knit(const WeightTuple& b0, const WeightTuple& b1, std::int64_t depth) {
  return is_knit(b0, b1 - b0, depth, FamilyKind::TightlyKnit);
}
inline bool is_loosely_knit(const WeightTuple& b0, const WeightTuple& b1, std::int64_t depth) {
  return is_knit(b0, b1 - b0, depth, FamilyKind::LooselyKnit);
}

/// Minimum norm at a level after excluding later members of families based
/// at smaller levels. Without a value the row is either AllExcluded or, when
/// `unresolved` is set, the norm cap ran out first: the minimum is then above
/// the cap or the level is all excluded.
struct Min2kRow {
  std::int64_t level = 0;
  FamilyKind kind = FamilyKind::TightlyKnit;
  std::int64_t depth = 0;
  std::optional<std::int64_t> value;
  /// The arc achieving the value.
  std::optional<WeightTuple> witness;
  bool unresolved = false;

  friend bool operator==(const Min2kRow&, const Min2kRow&) = default;
};

struct Min2kOptions {
  FamilyKind kind = FamilyKind::TightlyKnit;
  std::int64_t depth = 100;
  SweepOptions sweep;
  /// First norm cap tried for the arc index; doubled until every level in
  /// range has an unexcluded arc under the cap or no arc is left out.
  std::int64_t initial_cap = 16;
  /// No doubling past this; levels still open are reported unresolved.
  /// Non-positive means no limit.
  std::int64_t max_cap = 0;
  /// Progress: a level was scanned (row is set once the level is in range).
  std::function<void(std::int64_t level, std::int64_t cap, const Min2kRow* row)> on_level;
};

/// Rows for every even level in [lo, hi]. Arcs at levels below lo are still
/// scanned as potential family bases.
std::vector<Min2kRow> min_excluding_families(std::int64_t lo, std::int64_t hi,
                                             const Min2kOptions& options);

/// An arithmetic progression of arcs.
struct FamilyDescriptor {
  WeightTuple base;
  WeightTuple step;
  FamilyKind kind = FamilyKind::TightlyKnit;
  /// Nonzero coefficients of the base polynomial; tight families only.
  std::vector<std::int64_t> signature;
  std::int64_t verified_depth = 0;
  std::int64_t base_level = 0;
  std::int64_t base_norm = 0;

  friend bool operator==(const FamilyDescriptor&, const FamilyDescriptor&) = default;
};

/// Chains minimum-norm witnesses into progressions. Witnesses are taken in
/// level order; each extends the family whose next member it is, otherwise
/// pairs with the nearest-level unpaired witness it can extend, otherwise
/// starts a new family. Isolated witnesses come back with depth 0.
std::vector<FamilyDescriptor> extract_families(const std::vector<LevelStats>& levels,
                                               FamilyKind kind);

}  // namespace burau4
