#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "burau4/analysis.hpp"

namespace burau4::cli {

/// A resumable scan over a list of levels.
struct SweepPlan {
  std::vector<std::int64_t> levels;
  SweepOptions options;
  /// Empty disables checkpointing.
  std::string checkpoint_path;
  std::string fingerprint;
  /// Tuples between intra-level checkpoint writes.
  std::int64_t checkpoint_every = 1'000'000;
  /// Stop (as if interrupted) once this many tuples were scanned in this
  /// run; 0 never stops.
  std::int64_t stop_after = 0;
  bool quiet = false;
  /// Called with every completed level, resumed ones included, in order.
  std::function<void(const std::vector<LevelTally>& done)> on_level;
};

struct SweepResult {
  std::vector<LevelTally> levels;
  bool interrupted = false;
};

/// Throws CheckpointMismatch if the checkpoint file belongs to another plan.
SweepResult run_sweep(const SweepPlan& plan, std::ostream& log);

/// Flag raised by SIGINT / SIGTERM once install_interrupt_handlers ran.
std::atomic<bool>& interrupt_flag();
void install_interrupt_handlers();

}  // namespace burau4::cli
