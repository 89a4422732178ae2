#include <gtest/gtest.h>

#include "burau4/admissibility.hpp"
#include "burau4/error.hpp"
#include "burau4/oracle.hpp"

using namespace burau4;

TEST(Diagram, Components) {
  EXPECT_EQ(components(build_diagram(WeightTuple{2, 2, 3, 1, 8})).size(), 1u);
  EXPECT_EQ(components(build_diagram(WeightTuple{22, 74, 89, 21, 192})).size(), 1u);
  EXPECT_EQ(components(build_diagram(WeightTuple{4, 4, 6, 2, 16})).size(), 2u);
  EXPECT_EQ(components(build_diagram(WeightTuple{44, 148, 178, 42, 384})).size(), 2u);
  EXPECT_TRUE(components(build_diagram(WeightTuple{})).empty());
}

TEST(Diagram, StrandCounts) {
  const auto w = derive_weights({2, 2, 3, 1, 8});
  const auto d = build_diagram(w);
  std::int64_t total = 0;
  for (auto x : w) total += x;
  EXPECT_EQ(d.strand_count(), total);
  EXPECT_EQ(static_cast<std::int64_t>(d.link.size()), 2 * total);
  for (std::size_t r = 0; r < kRailCount; ++r) {
    for (auto id = d.first[r]; id < d.first[r + 1]; ++id) EXPECT_EQ(d.rail_of(id), static_cast<int>(r));
  }
}

TEST(Diagram, RejectsBrokenWeights) {
  auto w = derive_weights({2, 2, 3, 1, 8});
  w[9] += 2;
  try {
    build_diagram(w);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidWeights);
  }
}

TEST(Reference, Examples) {
  const auto base = trace_reference({22, 74, 89, 21, 192});
  ASSERT_EQ(base.status, TraceStatus::GenuineArc);
  EXPECT_EQ(base.crossings, 48);
  EXPECT_EQ(poly_norm(*base.polynomial), 10);

  const auto small = trace_reference({8, 4, 5, 7, 24});
  ASSERT_EQ(small.status, TraceStatus::GenuineArc);
  EXPECT_EQ(small.crossings, 6);
  EXPECT_EQ(to_string(*small.record), "(3,5,3,5,4,2,4,2,4,2,4)");

  EXPECT_EQ(trace_reference({2, 2, 3, 1, 8}).crossings, 2);
  EXPECT_EQ(trace_reference({44, 148, 178, 42, 384}).status, TraceStatus::NonAdmissible);
}

TEST(Reference, EssentialCrossingsAreASubset) {
  const auto w = derive_weights({22, 74, 89, 21, 192});
  const auto walk = walk_arc(w, 1'000'000);
  const auto all = all_crossings(walk);
  const auto essential = essential_crossings(walk);
  EXPECT_EQ(essential.size(), 48u);
  EXPECT_GE(all.size(), essential.size());
  EXPECT_EQ((all.size() - essential.size()) % 2, 0u);
}

TEST(Reference, WalkBudget) {
  const auto w = derive_weights({22, 74, 89, 21, 192});
  try {
    walk_arc(w, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::StepBudgetExceeded);
  }
}

// The drawn picture is an embedding: strands and arc never cross each other
// or themselves; the arc meets the fixed arc at least as often as the
// essential count, with extra meetings in cancelling pairs. The polynomial
// read from the picture matches the reference, and reading it from the fixed
// arc's side gives the dual.
TEST(Planarity, DrawnPictureUpTo8) {
  for (std::int64_t c = 2; c <= 8; c += 2) {
    for (const auto& t : enumerate_level(c)) {
      const auto ref = trace_reference(t);
      if (ref.status != TraceStatus::GenuineArc) continue;
      const auto r = check_planarity(t);
      EXPECT_EQ(r.strand_self_intersections, 0) << to_string(t);
      EXPECT_EQ(r.arc_strand_intersections, 0) << to_string(t);
      EXPECT_EQ(r.arc_self_intersections, 0) << to_string(t);
      EXPECT_GE(r.arc_fixed_arc_intersections, ref.crossings) << to_string(t);
      EXPECT_EQ((r.arc_fixed_arc_intersections - ref.crossings) % 2, 0) << to_string(t);
      EXPECT_TRUE(poly_equal_up_to_unit(geometric_polynomial(t), *ref.polynomial)) << to_string(t);
      EXPECT_TRUE(poly_equal_up_to_unit(polynomial_lifting_fixed_arc(t), poly_dual(*ref.polynomial)))
          << to_string(t);
    }
  }
}

TEST(Svg, RendersTheArc) {
  const auto svg = render_svg({8, 4, 5, 7, 24});
  EXPECT_EQ(svg.rfind("<svg", 0), 0u);
  EXPECT_NE(svg.find("</svg>"), std::string::npos);
}
