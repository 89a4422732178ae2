#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "burau4/analysis.hpp"

namespace burau4::cli {

inline constexpr int kCheckpointSchema = 1;

/// FNV-1a over the canonical config text, as 16 hex digits.
std::string fingerprint(std::string_view config);

/// A level that was interrupted part way: the tally covers partitions
/// [0, next_partition).
struct LevelCursor {
  std::int64_t level = 0;
  std::size_t next_partition = 0;
  LevelTally tally;

  friend bool operator==(const LevelCursor&, const LevelCursor&) = default;
};

struct Checkpoint {
  int schema = kCheckpointSchema;
  std::string fingerprint;
  std::vector<LevelTally> done;
  std::optional<LevelCursor> cursor;

  friend bool operator==(const Checkpoint&, const Checkpoint&) = default;
};

std::string format_checkpoint(const Checkpoint& c);
/// Throws ParseError on malformed input or a different schema.
Checkpoint parse_checkpoint(std::string_view text);

/// Reads a checkpoint if the file exists. Throws CheckpointMismatch when it
/// was written for a different config.
std::optional<Checkpoint> load_checkpoint(const std::string& path, const std::string& fingerprint);

}  // namespace burau4::cli
