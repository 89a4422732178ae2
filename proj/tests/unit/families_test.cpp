#include <gtest/gtest.h>

#include <optional>

#include "burau4/admissibility.hpp"
#include "burau4/analysis.hpp"
#include "burau4/error.hpp"

using namespace burau4;

namespace {

const WeightTuple kFamilyBase{22, 74, 89, 21, 192};
const WeightTuple kFamilyStep{2, 10, 12, 2, 24};

struct Arc {
  WeightTuple tuple;
  std::int64_t norm;
};

std::vector<Arc> arcs_up_to(std::int64_t c) {
  std::vector<Arc> out;
  for (std::int64_t level = 2; level <= c; level += 2) {
    for (const auto& t : enumerate_level(level)) {
      const auto o = trace_exact(t);
      if (o.status == TraceStatus::GenuineArc) out.push_back({t, poly_norm(*o.polynomial)});
    }
  }
  return out;
}

// First pair (a, b) of arcs up to level 10 with b - a >= 0 and pred(a, b).
template <class Pred>
std::optional<std::pair<Arc, Arc>> find_pair(Pred pred) {
  const auto arcs = arcs_up_to(10);
  for (const auto& a : arcs) {
    for (const auto& b : arcs) {
      const auto d = b.tuple - a.tuple;
      if (d.nonnegative() && !d.is_zero() && pred(a, b)) return std::make_pair(a, b);
    }
  }
  return std::nullopt;
}

}  // namespace

TEST(Knit, ExampleFamilyIsTight) {
  EXPECT_TRUE(is_tightly_knit(kFamilyBase, kFamilyBase + kFamilyStep, 100));
  EXPECT_TRUE(is_loosely_knit(kFamilyBase, kFamilyBase + kFamilyStep, 100));
  EXPECT_EQ(knit_depth(kFamilyBase, kFamilyStep, 40, FamilyKind::TightlyKnit), 40);
}

TEST(Knit, Preconditions) {
  EXPECT_THROW(is_tightly_knit(kFamilyBase, kFamilyBase, 10), Error);
  EXPECT_THROW(is_knit(kFamilyBase, kFamilyStep, 0, FamilyKind::LooselyKnit), Error);
  EXPECT_EQ(knit_depth({44, 148, 178, 42, 384}, kFamilyStep, 5, FamilyKind::TightlyKnit), -1);
}

TEST(Knit, DifferentNormsAreNotTight) {
  const auto pair = find_pair([](const Arc& a, const Arc& b) { return a.norm != b.norm; });
  ASSERT_TRUE(pair);
  EXPECT_FALSE(is_tightly_knit(pair->first.tuple, pair->second.tuple, 100));
}

TEST(Knit, SmallerNormIsNotLoose) {
  const auto pair = find_pair([](const Arc& a, const Arc& b) { return b.norm < a.norm; });
  ASSERT_TRUE(pair);
  EXPECT_FALSE(is_loosely_knit(pair->first.tuple, pair->second.tuple, 100));
  EXPECT_EQ(knit_depth(pair->first.tuple, pair->second.tuple - pair->first.tuple, 100,
                       FamilyKind::LooselyKnit),
            0);
}

TEST(Knit, TightImpliesLoose) {
  const auto arcs = arcs_up_to(8);
  int tight = 0;
  ArcCache cache;
  for (const auto& a : arcs) {
    for (const auto& b : arcs) {
      const auto d = b.tuple - a.tuple;
      if (!d.nonnegative() || d.is_zero() || a.norm != b.norm) continue;
      if (!is_knit(a.tuple, d, 8, FamilyKind::TightlyKnit, &cache)) continue;
      ++tight;
      EXPECT_TRUE(is_knit(a.tuple, d, 8, FamilyKind::LooselyKnit, &cache));
    }
  }
  // Low levels have no tight pairs; the example family supplies one.
  EXPECT_EQ(tight, 0);
  ASSERT_TRUE(is_knit(kFamilyBase, kFamilyStep, 8, FamilyKind::TightlyKnit, &cache));
  EXPECT_TRUE(is_knit(kFamilyBase, kFamilyStep, 8, FamilyKind::LooselyKnit, &cache));
}

TEST(Knit, MemberRejectsNonArcs) {
  // Doubling the step puts members at even w2, which is never admissible.
  EXPECT_FALSE(is_tightly_knit({2, 2, 3, 1, 8}, {2, 2, 4, 1, 8}, 3));
}

TEST(Min2k, FirstLevelEqualsMinimumNorm) {
  Min2kOptions o;
  o.depth = 100;
  const auto rows = min_excluding_families(2, 2, o);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0].value, 2);
  EXPECT_FALSE(rows[0].unresolved);
}

TEST(Min2k, TightDepthsAgreeOnSmallRange) {
  Min2kOptions o;
  o.depth = 100;
  const auto shallow = min_excluding_families(2, 40, o);
  o.depth = 1000;
  const auto deep = min_excluding_families(2, 40, o);
  ASSERT_EQ(shallow.size(), 20u);
  ASSERT_EQ(deep.size(), shallow.size());
  for (std::size_t i = 0; i < shallow.size(); ++i) {
    EXPECT_EQ(shallow[i].level, 2 + 2 * static_cast<std::int64_t>(i));
    ASSERT_TRUE(shallow[i].value);
    EXPECT_GE(*shallow[i].value, 1);
    EXPECT_EQ(shallow[i].value, deep[i].value) << shallow[i].level;
  }
}

TEST(Min2k, WitnessIsNotExcluded) {
  Min2kOptions o;
  o.depth = 50;
  const auto rows = min_excluding_families(10, 20, o);
  for (const auto& r : rows) {
    ASSERT_TRUE(r.witness);
    EXPECT_EQ(crossing_count(*r.witness), r.level);
    const auto p = trace_exact(*r.witness);
    EXPECT_EQ(poly_norm(*p.polynomial), *r.value);
  }
}

// With the literal loose rule a norm-2 arc at level 2 starts a family
// through every arc above it whose members stay arcs, so level 4 is wholly
// excluded.
TEST(Min2k, LooseExcludesEverythingAtLevelFour) {
  Min2kOptions o;
  o.kind = FamilyKind::LooselyKnit;
  o.depth = 100;
  const auto rows = min_excluding_families(2, 6, o);
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[0].value, 2);
  EXPECT_FALSE(rows[1].value);
  EXPECT_FALSE(rows[1].unresolved);
}

TEST(Min2k, CapLimitLeavesLevelsUnresolved) {
  Min2kOptions o;
  o.kind = FamilyKind::LooselyKnit;
  o.depth = 20;
  o.initial_cap = 4;
  o.max_cap = 4;
  const auto rows = min_excluding_families(2, 10, o);
  bool any_unresolved = false;
  for (const auto& r : rows) {
    if (r.unresolved) {
      any_unresolved = true;
      EXPECT_FALSE(r.value);
    }
  }
  EXPECT_TRUE(any_unresolved);
}

TEST(Min2k, Preconditions) {
  Min2kOptions o;
  EXPECT_THROW(min_excluding_families(3, 10, o), Error);
  EXPECT_THROW(min_excluding_families(10, 4, o), Error);
  o.depth = 0;
  EXPECT_THROW(min_excluding_families(2, 4, o), Error);
}

TEST(Families, ChainsExampleMembers) {
  std::vector<LevelStats> levels;
  for (std::int64_t m = 0; m <= 3; ++m) {
    LevelStats s;
    s.level = 48 + 6 * m;
    s.minnorm = 10;
    s.mult = 1;
    s.witnesses = {kFamilyBase + kFamilyStep * m};
    levels.push_back(s);
  }
  LevelStats lone;
  lone.level = 2;
  lone.minnorm = 2;
  lone.mult = 1;
  lone.witnesses = {{2, 2, 3, 1, 8}};
  levels.insert(levels.begin(), lone);

  const auto families = extract_families(levels, FamilyKind::TightlyKnit);
  ASSERT_EQ(families.size(), 2u);
  EXPECT_EQ(families[0].base, (WeightTuple{2, 2, 3, 1, 8}));
  EXPECT_EQ(families[0].verified_depth, 0);
  EXPECT_TRUE(families[0].step.is_zero());
  EXPECT_EQ(families[1].base, kFamilyBase);
  EXPECT_EQ(families[1].step, kFamilyStep);
  EXPECT_EQ(families[1].verified_depth, 3);
  EXPECT_EQ(families[1].base_level, 48);
  EXPECT_EQ(families[1].base_norm, 10);
  EXPECT_EQ(families[1].signature, (std::vector<std::int64_t>{-1, -1, -1, -1, -1, 1, -2, 1, -1}));
}

TEST(Families, RejectsNonArcWitness) {
  LevelStats s;
  s.level = 4;
  s.witnesses = {{44, 148, 178, 42, 384}};
  EXPECT_THROW(extract_families({s}, FamilyKind::TightlyKnit), Error);
}

TEST(FamilyKind, Text) {
  EXPECT_EQ(to_string(FamilyKind::TightlyKnit), "tight");
  EXPECT_EQ(parse_family_kind("loose"), FamilyKind::LooselyKnit);
  EXPECT_THROW(parse_family_kind("medium"), Error);
}
