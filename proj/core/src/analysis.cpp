#include "burau4/analysis.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>

#include "burau4/admissibility.hpp"
#include "burau4/error.hpp"

namespace burau4 {

void parallel_for(std::size_t count, int workers, const std::function<void(std::size_t)>& fn) {
  if (workers < 1) throw Error(ErrorCode::PreconditionViolated, "worker count must be positive");
  const auto threads = std::min<std::size_t>(static_cast<std::size_t>(workers), count);
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_lock;
  auto body = [&] {
    for (;;) {
      const auto i = next.fetch_add(1);
      if (i >= count) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard lock(failure_lock);
        if (!failure) failure = std::current_exception();
        next.store(count);
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(threads - 1);
  for (std::size_t i = 1; i < threads; ++i) pool.emplace_back(body);
  body();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

int default_worker_count() {
  if (const char* env = std::getenv("BURAU4_WORKERS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1 && v <= 1024) return static_cast<int>(v);
  }
  return 1;
}

void LevelTally::fold(const LevelTally& part) {
  tuples += part.tuples;
  genuine += part.genuine;
  multicurves += part.multicurves;
  possibly_zero += part.possibly_zero;
  zeros.insert(zeros.end(), part.zeros.begin(), part.zeros.end());
  if (part.minnorm >= 0) {
    if (minnorm < 0 || part.minnorm < minnorm) {
      minnorm = part.minnorm;
      witnesses = part.witnesses;
    } else if (part.minnorm == minnorm) {
      witnesses.insert(witnesses.end(), part.witnesses.begin(), part.witnesses.end());
    }
  }
  kept.insert(kept.end(), part.kept.begin(), part.kept.end());
}

LevelTally scan_partition(std::int64_t level, std::int64_t w0, const SweepOptions& options) {
  LevelTally out;
  out.level = level;
  const TraceOptions exact{TraceMode::Exact, options.screen_bits, false};
  for (const auto& t : enumerate_partition(level, w0)) {
    ++out.tuples;
    const auto s = screen(t, options.screen_bits);
    if (s.status != TraceStatus::GenuineArc) {
      ++out.multicurves;
      continue;
    }
    ++out.genuine;
    // The residue norm never exceeds the exact norm, so most arcs are
    // settled without an exact trace.
    const bool needed = s.residue_norm == 0 || out.minnorm < 0 || s.residue_norm <= out.minnorm ||
                        s.residue_norm <= options.keep_norm_cap;
    if (!needed) continue;
    auto o = trace(t, exact);
    auto& p = o.polynomial.value();
    const auto n = poly_norm(p);
    if (s.residue_norm == 0) {
      ++out.possibly_zero;
      if (p.is_zero()) out.zeros.push_back(t);
    }
    if (out.minnorm < 0 || n < out.minnorm) {
      out.minnorm = n;
      out.witnesses.assign(1, t);
    } else if (n == out.minnorm) {
      out.witnesses.push_back(t);
    }
    if (n <= options.keep_norm_cap) out.kept.push_back({t, std::move(p), n});
  }
  return out;
}

std::optional<LevelTally> scan_level(std::int64_t level, const SweepOptions& options,
                                     LevelTally start, std::size_t first_partition,
                                     const PartitionProgress& progress) {
  if (level < 2 || level % 2 != 0) {
    throw Error(ErrorCode::PreconditionViolated,
                "level must be even and positive, got " + std::to_string(level));
  }
  const auto partitions = level_partitions(level);
  if (first_partition > partitions.size()) {
    throw Error(ErrorCode::PreconditionViolated, "partition cursor past the end of the level");
  }
  LevelTally tally = std::move(start);
  tally.level = level;
  const auto batch = static_cast<std::size_t>(std::max(1, options.workers)) * 4;
  for (auto first = first_partition; first < partitions.size();) {
    if (options.cancel && options.cancel->load()) return std::nullopt;
    const auto count = std::min(batch, partitions.size() - first);
    std::vector<LevelTally> parts(count);
    parallel_for(count, options.workers, [&](std::size_t i) {
      parts[i] = scan_partition(level, partitions[first + i], options);
    });
    for (const auto& part : parts) tally.fold(part);
    first += count;
    if (progress) progress(tally, first);
  }
  return tally;
}

LevelStats stats_from_tally(const LevelTally& tally) {
  if (tally.minnorm < 0) {
    throw Error(ErrorCode::EmptyLevel,
                "no genuine arc with " + std::to_string(tally.level) + " crossings");
  }
  LevelStats s;
  s.level = tally.level;
  s.minnorm = tally.minnorm;
  s.mult = static_cast<std::int64_t>(tally.witnesses.size());
  s.witnesses = tally.witnesses;
  s.arcs_tested = tally.tuples;
  return s;
}

LevelStats level_stats(std::int64_t level, const SweepOptions& options) {
  return stats_from_tally(scan_level(level, options).value());
}

std::int64_t CertificationReport::zero_count() const {
  std::int64_t n = 0;
  for (const auto& l : levels) n += static_cast<std::int64_t>(l.zeros.size());
  return n;
}

std::int64_t CertificationReport::arcs_tested() const {
  std::int64_t n = 0;
  for (const auto& l : levels) n += l.tuples;
  return n;
}

CertificationReport certify_range(std::int64_t max_crossings, const SweepOptions& options) {
  if (max_crossings < 2) throw Error(ErrorCode::PreconditionViolated, "max crossings must be >= 2");
  CertificationReport report;
  for (std::int64_t level = 2; level <= max_crossings; level += 2) {
    auto tally = scan_level(level, options);
    if (!tally) break;
    report.levels.push_back(std::move(*tally));
  }
  return report;
}

std::int64_t periodic_minnorm(std::int64_t level) noexcept { return level % 6 == 0 ? 10 : 8; }

std::int64_t periodic_mult(std::int64_t level) noexcept { return level % 6 == 2 ? 6 : 18; }

std::vector<PeriodicityViolation> periodicity_check(std::int64_t lo, std::int64_t hi,
                                                    const SweepOptions& options) {
  if (lo < 44 || hi > 500 || lo > hi || lo % 2 != 0 || hi % 2 != 0) {
    throw Error(ErrorCode::PreconditionViolated, "periodicity range must be even within [44, 500]");
  }
  std::vector<PeriodicityViolation> out;
  for (auto level = lo; level <= hi; level += 2) {
    const auto s = level_stats(level, options);
    const auto em = periodic_minnorm(level);
    const auto ec = periodic_mult(level);
    if (s.minnorm != em || s.mult != ec) out.push_back({level, s.minnorm, s.mult, em, ec});
  }
  return out;
}

}  // namespace burau4
