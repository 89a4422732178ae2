#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "burau4/analysis.hpp"
#include "burau4/record.hpp"

namespace burau4 {

/// One row of levels.csv: level,minnorm,mult,arcs_tested.
struct LevelRow {
  std::int64_t level = 0;
  std::int64_t minnorm = 0;
  std::int64_t mult = 0;
  std::int64_t arcs_tested = 0;

  friend bool operator==(const LevelRow&, const LevelRow&) = default;
};

LevelRow to_row(const LevelStats& s);

std::string format_levels_csv(const std::vector<LevelRow>& rows);
std::vector<LevelRow> parse_levels_csv(std::string_view text);

/// One row of certify.csv.
struct CertifyRow {
  std::int64_t level = 0;
  std::int64_t arcs_tested = 0;
  std::int64_t genuine = 0;
  std::int64_t multicurves = 0;
  std::int64_t possibly_zero = 0;
  std::int64_t zeros = 0;

  friend bool operator==(const CertifyRow&, const CertifyRow&) = default;
};

CertifyRow to_certify_row(const LevelTally& t);

std::string format_certify_csv(const std::vector<CertifyRow>& rows);
std::vector<CertifyRow> parse_certify_csv(std::string_view text);

/// One line of arcs.jsonl.
struct ArcEntry {
  std::int64_t level = 0;
  WeightTuple tuple;
  std::int64_t crossings = 0;
  /// Canonical form.
  LaurentPolynomial polynomial;
  std::int64_t norm = 0;
  ArcRecord record;
  std::vector<int> cases;

  friend bool operator==(const ArcEntry&, const ArcEntry&) = default;
};

/// Traces the tuple exactly; throws PreconditionViolated unless it is a
/// genuine arc.
ArcEntry describe_arc(const WeightTuple& t);

std::string format_arc_line(const ArcEntry& e);
ArcEntry parse_arc_line(std::string_view line);
std::string format_arcs_jsonl(const std::vector<ArcEntry>& entries);
std::vector<ArcEntry> parse_arcs_jsonl(std::string_view text);

std::string format_families_json(const std::vector<FamilyDescriptor>& families);
std::vector<FamilyDescriptor> parse_families_json(std::string_view text);

/// min2k.csv: level,kind,depth,value,witness. An empty value column with
/// witness "all-excluded" means every arc at the level was excluded;
/// "unresolved" means the norm cap ran out before that was settled.
std::string format_min2k_csv(const std::vector<Min2kRow>& rows);
std::vector<Min2kRow> parse_min2k_csv(std::string_view text);

/// Scatter plot of min2k value against level, one series per kind and
/// depth found in the rows.
std::string render_min2k_svg(const std::vector<Min2kRow>& rows);

/// Writes atomically: a temporary next to the target, then a rename.
/// Throws IoError.
void write_file(const std::string& path, std::string_view content);
std::string read_file(const std::string& path);

}  // namespace burau4
