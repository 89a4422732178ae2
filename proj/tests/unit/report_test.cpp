#include <gtest/gtest.h>

#include <filesystem>

#include "burau4/error.hpp"
#include "burau4/report.hpp"

using namespace burau4;

namespace fs = std::filesystem;

namespace {

fs::path scratch_dir(const std::string& name) {
  auto dir = fs::temp_directory_path() / ("burau4_report_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto at = text.find(needle); at != std::string::npos; at = text.find(needle, at + 1)) ++n;
  return n;
}

}  // namespace

TEST(LevelsCsv, RoundTrip) {
  const std::vector<LevelRow> rows{{2, 2, 5, 7}, {4, 4, 37, 60}, {36, 10, 36, 37444}};
  const auto text = format_levels_csv(rows);
  EXPECT_EQ(text.substr(0, text.find('\n')), "level,minnorm,mult,arcs_tested");
  EXPECT_EQ(parse_levels_csv(text), rows);
  EXPECT_THROW(parse_levels_csv("level,minnorm\n2,2\n"), Error);
  EXPECT_THROW(parse_levels_csv("level,minnorm,mult,arcs_tested\n2,x,5,7\n"), Error);
}

TEST(CertifyCsv, RoundTrip) {
  const std::vector<CertifyRow> rows{{2, 7, 5, 2, 0, 0}, {300, 123456, 80000, 43456, 3, 0}};
  EXPECT_EQ(parse_certify_csv(format_certify_csv(rows)), rows);
}

TEST(CertifyCsv, FromTally) {
  LevelTally t;
  t.level = 8;
  t.tuples = 10;
  t.genuine = 6;
  t.multicurves = 4;
  t.possibly_zero = 1;
  EXPECT_EQ(to_certify_row(t), (CertifyRow{8, 10, 6, 4, 1, 0}));
}

TEST(ArcsJsonl, DescribeAndRoundTrip) {
  const auto e = describe_arc({8, 4, 5, 7, 24});
  EXPECT_EQ(e.level, 6);
  EXPECT_EQ(e.crossings, 6);
  EXPECT_EQ(to_string(e.record), "(3,5,3,5,4,2,4,2,4,2,4)");
  EXPECT_EQ(e.polynomial, canonical_form(e.polynomial));
  EXPECT_EQ(e.norm, poly_norm(e.polynomial));
  EXPECT_FALSE(e.cases.empty());
  const std::vector<ArcEntry> entries{e, describe_arc({22, 74, 89, 21, 192})};
  const auto text = format_arcs_jsonl(entries);
  EXPECT_EQ(count(text, "\n"), 2u);
  EXPECT_EQ(parse_arcs_jsonl(text), entries);
  EXPECT_THROW(describe_arc({44, 148, 178, 42, 384}), Error);
  EXPECT_THROW(parse_arc_line("{\"level\": 2}"), Error);
}

TEST(FamiliesJson, RoundTrip) {
  FamilyDescriptor f;
  f.base = {22, 74, 89, 21, 192};
  f.step = {2, 10, 12, 2, 24};
  f.signature = {-1, -1, -1, -1, -1, 1, -2, 1, -1};
  f.verified_depth = 100;
  f.base_level = 48;
  f.base_norm = 10;
  FamilyDescriptor lone;
  lone.base = {2, 2, 3, 1, 8};
  lone.kind = FamilyKind::LooselyKnit;
  lone.base_level = 2;
  lone.base_norm = 2;
  const std::vector<FamilyDescriptor> families{f, lone};
  const auto text = format_families_json(families);
  EXPECT_NE(text.find("\"count\": 2"), std::string::npos);
  EXPECT_EQ(parse_families_json(text), families);
  EXPECT_THROW(parse_families_json("[1, 2"), Error);
}

TEST(Min2kCsv, RoundTrip) {
  std::vector<Min2kRow> rows(4);
  rows[0] = {2, FamilyKind::TightlyKnit, 100, 2, WeightTuple{2, 2, 3, 1, 8}, false};
  rows[1] = {4, FamilyKind::LooselyKnit, 100, std::nullopt, std::nullopt, false};
  rows[2] = {18, FamilyKind::LooselyKnit, 1000, std::nullopt, std::nullopt, true};
  rows[3] = {20, FamilyKind::TightlyKnit, 1000, 8, WeightTuple{4, 16, 19, 3, 40}, false};
  const auto text = format_min2k_csv(rows);
  EXPECT_NE(text.find("4,loose,100,,all-excluded"), std::string::npos);
  EXPECT_NE(text.find("18,loose,1000,,unresolved"), std::string::npos);
  EXPECT_EQ(parse_min2k_csv(text), rows);
  EXPECT_THROW(parse_min2k_csv("level,kind,depth,value,witness\n2,tight,100,2,all-excluded\n"), Error);
}

TEST(Min2kSvg, OnePointPerValue) {
  std::vector<Min2kRow> rows;
  for (std::int64_t level = 2; level <= 40; level += 2) {
    rows.push_back({level, FamilyKind::TightlyKnit, 100, level / 2 + 1, WeightTuple{}, false});
  }
  rows.push_back({42, FamilyKind::LooselyKnit, 100, std::nullopt, std::nullopt, false});
  const auto svg = render_min2k_svg(rows);
  EXPECT_EQ(svg.rfind("<svg", 0), 0u);
  EXPECT_EQ(count(svg, "class=\"point\""), 20u);
  EXPECT_EQ(count(svg, "<g class=\"series\""), 2u);
  EXPECT_NE(svg.find("</svg>"), std::string::npos);
}

TEST(Files, WriteIsAtomicAndReadable) {
  const auto dir = scratch_dir("files");
  const auto path = (dir / "nested" / "out.txt").string();
  write_file(path, "first\n");
  write_file(path, "second\n");
  EXPECT_EQ(read_file(path), "second\n");
  EXPECT_FALSE(fs::exists(path + ".tmp"));
  try {
    read_file((dir / "missing").string());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::IoError);
  }
  EXPECT_THROW(write_file((dir / "nested" / "out.txt" / "below").string(), "x"), Error);
}
