#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace burau4 {

/// Threshold positions selected on each pass along rail 14, alternating left
/// and right travel and starting with a left pass. The final pass into the
/// terminal puncture is not recorded.
///
/// Left symbols are positions in the eight-entry left list (9 means beyond
/// every entry; 7 cannot occur because the sixth and seventh entries always
/// coincide). Right symbols are 1..6 with 6 meaning beyond every entry.
struct ArcRecord {
  std::vector<std::uint8_t> entries;

  ArcRecord() = default;
  ArcRecord(std::initializer_list<int> symbols);

  bool well_formed() const noexcept;
  std::size_t size() const noexcept { return entries.size(); }

  friend bool operator==(const ArcRecord&, const ArcRecord&) = default;
};

bool is_left_symbol(int s) noexcept;
bool is_right_symbol(int s) noexcept;

/// "(3,5,3,5,4)".
std::string to_string(const ArcRecord& r);

ArcRecord parse_record(const std::string& text);

}  // namespace burau4
