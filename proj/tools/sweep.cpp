#include "sweep.hpp"

#include <csignal>
#include <ostream>

#include "burau4/error.hpp"
#include "burau4/report.hpp"
#include "checkpoint.hpp"

namespace burau4::cli {

namespace {

std::atomic<bool> g_interrupted{false};

extern "C" void on_signal(int) { g_interrupted.store(true); }

void save(const SweepPlan& plan, const std::vector<LevelTally>& done,
          const std::optional<LevelCursor>& cursor) {
  if (plan.checkpoint_path.empty()) return;
  Checkpoint c;
  c.fingerprint = plan.fingerprint;
  c.done = done;
  c.cursor = cursor;
  write_file(plan.checkpoint_path, format_checkpoint(c));
}

}  // namespace

std::atomic<bool>& interrupt_flag() { return g_interrupted; }

void install_interrupt_handlers() {
  std::signal(SIGINT, on_signal);
  std::signal(SIGTERM, on_signal);
}

SweepResult run_sweep(const SweepPlan& plan, std::ostream& log) {
  SweepResult result;
  std::optional<LevelCursor> cursor;
  if (auto c = load_checkpoint(plan.checkpoint_path, plan.fingerprint)) {
    if (c->done.size() > plan.levels.size()) {
      throw Error(ErrorCode::CheckpointMismatch, "checkpoint has more levels than the run");
    }
    for (std::size_t i = 0; i < c->done.size(); ++i) {
      if (c->done[i].level != plan.levels[i]) {
        throw Error(ErrorCode::CheckpointMismatch, "checkpoint levels do not match the run");
      }
    }
    if (c->cursor && (c->done.size() == plan.levels.size() ||
                      c->cursor->level != plan.levels[c->done.size()])) {
      throw Error(ErrorCode::CheckpointMismatch, "checkpoint cursor does not match the run");
    }
    result.levels = std::move(c->done);
    cursor = std::move(c->cursor);
    if (!plan.quiet) {
      log << "resuming after " << result.levels.size() << " completed levels";
      if (cursor) log << ", level " << cursor->level << " at partition " << cursor->next_partition;
      log << '\n';
    }
    if (plan.on_level && !result.levels.empty()) plan.on_level(result.levels);
  }

  std::atomic<bool> stop{false};
  auto options = plan.options;
  options.cancel = &stop;
  std::int64_t scanned = 0;
  std::int64_t last_save = 0;

  for (auto i = result.levels.size(); i < plan.levels.size(); ++i) {
    const auto level = plan.levels[i];
    LevelTally start;
    std::size_t first = 0;
    if (cursor) {
      start = std::move(cursor->tally);
      first = cursor->next_partition;
      cursor.reset();
    }
    const auto before = scanned;
    const auto offset = start.tuples;
    std::optional<LevelCursor> latest;
    auto progress = [&](const LevelTally& tally, std::size_t next) {
      scanned = before + tally.tuples - offset;
      latest = LevelCursor{level, next, tally};
      if (scanned - last_save >= plan.checkpoint_every) {
        save(plan, result.levels, latest);
        last_save = scanned;
      }
      if ((plan.stop_after > 0 && scanned >= plan.stop_after) || g_interrupted.load()) stop.store(true);
    };
    if (g_interrupted.load()) stop.store(true);
    auto tally = scan_level(level, options, start, first, progress);
    if (!tally) {
      if (!latest && first > 0) latest = LevelCursor{level, first, std::move(start)};
      if (latest && latest->next_partition == 0) latest.reset();
      save(plan, result.levels, latest);
      result.interrupted = true;
      if (!plan.quiet) {
        log << "stopped at level " << level;
        if (plan.checkpoint_path.empty()) log << " (no checkpoint file, progress is lost)";
        log << '\n';
      }
      return result;
    }
    result.levels.push_back(std::move(*tally));
    save(plan, result.levels, std::nullopt);
    last_save = scanned;
    if (!plan.quiet) {
      const auto& t = result.levels.back();
      log << "level " << level << ": " << t.tuples << " tuples, " << t.genuine << " arcs, minnorm "
          << t.minnorm << ", zeros " << t.zeros.size() << '\n';
    }
    if (plan.on_level) plan.on_level(result.levels);
  }
  return result;
}

}  // namespace burau4::cli
