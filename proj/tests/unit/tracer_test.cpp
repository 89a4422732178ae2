#include <gtest/gtest.h>

#include <random>

#include "burau4/admissibility.hpp"
#include "burau4/error.hpp"
#include "burau4/oracle.hpp"
#include "burau4/tracer.hpp"
#include "burau4/transition_table.hpp"

using namespace burau4;

namespace {

const WeightTuple kFamilyBase{22, 74, 89, 21, 192};
const WeightTuple kFamilyStep{2, 10, 12, 2, 24};

LaurentPolynomial family_polynomial(std::int64_t m) {
  LaurentPolynomial p;
  for (auto e : {-5, -3, -2, 0}) p += LaurentPolynomial::monomial(-1, e);
  const std::int64_t s = 3 * m;
  p += LaurentPolynomial::monomial(-1, 18 + s);
  p += LaurentPolynomial::monomial(1, 19 + s);
  p += LaurentPolynomial::monomial(-2, 20 + s);
  p += LaurentPolynomial::monomial(1, 21 + s);
  p += LaurentPolynomial::monomial(-1, 22 + s);
  return p;
}

std::vector<WeightTuple> tuples_up_to(std::int64_t c) {
  std::vector<WeightTuple> out;
  for (std::int64_t level = 2; level <= c; level += 2) {
    const auto l = enumerate_level(level);
    out.insert(out.end(), l.begin(), l.end());
  }
  return out;
}

}  // namespace

TEST(TransitionTable, FrozenTableMatchesDerivation) {
  const auto derived = derive_transition_table(default_probe_set(24));
  const auto frozen = transition_table();
  ASSERT_EQ(derived.size(), frozen.size());
  for (std::size_t i = 0; i < frozen.size(); ++i) EXPECT_EQ(derived[i], frozen[i]) << "rule " << i;
}

TEST(TransitionTable, ProbeSetCoversRecordSymbols) {
  const auto probes = default_probe_set(24);
  auto has = [&](const WeightTuple& t) { return std::find(probes.begin(), probes.end(), t) != probes.end(); };
  EXPECT_TRUE(has({8, 4, 5, 7, 24}));
  EXPECT_TRUE(has({10, 14, 17, 9, 48}));
  EXPECT_TRUE(has({8, 16, 19, 7, 48}));
}

TEST(Tracer, FamilyBase) {
  const auto o = trace_exact(kFamilyBase);
  ASSERT_EQ(o.status, TraceStatus::GenuineArc);
  EXPECT_EQ(o.crossings, 48);
  EXPECT_TRUE(poly_equal_up_to_unit(*o.polynomial, family_polynomial(0)));
  EXPECT_EQ(poly_norm(*o.polynomial), 10);
}

TEST(Tracer, FamilyMembers) {
  for (std::int64_t m = 0; m <= 10; ++m) {
    const auto o = trace_exact(kFamilyBase + kFamilyStep * m);
    ASSERT_EQ(o.status, TraceStatus::GenuineArc) << m;
    EXPECT_EQ(o.crossings, 48 + 6 * m);
    EXPECT_TRUE(poly_equal_up_to_unit(*o.polynomial, family_polynomial(m))) << m;
  }
}

TEST(Tracer, SmallestArc) {
  const auto o = trace_exact({2, 2, 3, 1, 8});
  ASSERT_EQ(o.status, TraceStatus::GenuineArc);
  EXPECT_EQ(o.crossings, 2);
  EXPECT_EQ(poly_norm(*o.polynomial), 2);
}

TEST(Tracer, Records) {
  const auto first = trace_exact({8, 4, 5, 7, 24});
  ASSERT_EQ(first.status, TraceStatus::GenuineArc);
  EXPECT_EQ(first.crossings, 6);
  EXPECT_EQ(to_string(*first.record), "(3,5,3,5,4,2,4,2,4,2,4)");
  EXPECT_EQ(to_string(*trace_exact({10, 14, 17, 9, 48}).record),
            "(3,5,3,5,4,1,2,4,2,4,2,5,3,5,3,5,4,2,4,2,4,2,4)");
  EXPECT_EQ(to_string(*trace_exact({6, 6, 7, 5, 24}).record), "(3,5,3,5,3,5,4,2,4,2,4)");
}

TEST(Tracer, NonAdmissibleAndMulticurve) {
  EXPECT_EQ(trace_exact({44, 148, 178, 42, 384}).status, TraceStatus::NonAdmissible);
  EXPECT_EQ(trace_exact({2, 2, 3, 1, 9}).status, TraceStatus::NonAdmissible);
  std::size_t multicurves = 0;
  for (const auto& t : enumerate_level(2)) {
    const auto o = trace_exact(t);
    if (o.status == TraceStatus::ProperMulticurve) {
      ++multicurves;
      EXPECT_FALSE(o.record.has_value());
      EXPECT_FALSE(o.polynomial.has_value());
    }
  }
  EXPECT_EQ(multicurves, 2u);
}

TEST(Tracer, ModeMisuse) {
  const auto o = trace_preliminary(kFamilyBase);
  try {
    (void)o.exact_polynomial();
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ModeMisuse);
  }
  EXPECT_NO_THROW((void)trace_exact(kFamilyBase).exact_polynomial());
}

// Oracle comparison up to 16 crossings; the acceptance run covers 24.
TEST(Tracer, AgreesWithOracle) {
  for (const auto& t : tuples_up_to(16)) {
    const auto fast = trace_exact(t);
    const auto ref = trace_reference(t);
    ASSERT_EQ(fast.status, ref.status) << to_string(t);
    if (fast.status != TraceStatus::GenuineArc) continue;
    ASSERT_EQ(fast.crossings, ref.crossings) << to_string(t);
    ASSERT_EQ(fast.record, ref.record) << to_string(t);
    ASSERT_TRUE(poly_equal_up_to_unit(*fast.polynomial, *ref.polynomial)) << to_string(t);
  }
}

TEST(Tracer, InvariantsUpTo24) {
  for (const auto& t : tuples_up_to(24)) {
    const auto o = trace_exact(t);
    if (o.status != TraceStatus::GenuineArc) continue;
    const auto w = derive_weights(t);
    EXPECT_EQ(o.crossings, t.w0 / 2 + t.w1 / 2 - std::min(w[1], w[8])) << to_string(t);
    EXPECT_EQ(o.crossings, crossing_count(t));
    EXPECT_GT(o.crossings, 0);
    EXPECT_EQ(o.crossings % 2, 0);
    EXPECT_TRUE(o.record->well_formed()) << to_string(t);
    EXPECT_LE(poly_norm(*o.polynomial), o.crossings);
    EXPECT_EQ(poly_norm(*o.polynomial) % 2, o.crossings % 2);
  }
}

TEST(Screening, FamilyBaseIsNonzero) {
  EXPECT_EQ(screen_zero(kFamilyBase, 7), ScreenResult::DefinitelyNonzero);
  EXPECT_EQ(screen_zero({2, 2, 3, 1, 8}, 7), ScreenResult::DefinitelyNonzero);
}

TEST(Screening, ResiduesAreTheReducedExactPolynomial) {
  for (const auto& t : tuples_up_to(24)) {
    const auto exact = trace_exact(t);
    for (int bits : {3, 7}) {
      const auto pre = trace_preliminary(t, bits);
      ASSERT_EQ(pre.status, exact.status) << to_string(t);
      if (pre.status != TraceStatus::GenuineArc) continue;
      ASSERT_EQ(pre.record, exact.record);
      const auto reduced = reduce_mod_power_of_two(*exact.polynomial, bits);
      ASSERT_EQ(pre.residues, reduced) << to_string(t);
      const bool all_zero = std::all_of(reduced.begin(), reduced.end(), [](auto c) { return c == 0; });
      EXPECT_EQ(screen_zero(t, bits), all_zero ? ScreenResult::PossiblyZero : ScreenResult::DefinitelyNonzero);
    }
  }
}

TEST(Screening, ResidueNormBoundsExactNorm) {
  for (const auto& t : tuples_up_to(20)) {
    const auto s = screen(t, 7);
    if (s.status != TraceStatus::GenuineArc) continue;
    const auto exact = trace_exact(t);
    EXPECT_LE(s.residue_norm, poly_norm(*exact.polynomial));
    EXPECT_EQ(s.crossings, exact.crossings);
  }
}

TEST(Screening, ReductionOfRandomPolynomials) {
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<int> coeff(-4, 4), exp(-300, 300), len(1, 16);
  for (int i = 0; i < 2000; ++i) {
    LaurentPolynomial p;
    std::vector<std::pair<std::int64_t, std::int64_t>> terms;
    for (int k = len(rng); k > 0; --k) terms.emplace_back(coeff(rng), exp(rng));
    for (auto [c, e] : terms) p += LaurentPolynomial::monomial(c, e);
    const auto r = reduce_mod_power_of_two(p, 7);
    ASSERT_EQ(r.size(), 128u);
    std::vector<std::int64_t> direct(128, 0);
    for (auto [c, e] : terms) direct[static_cast<std::size_t>(((e % 128) + 128) % 128)] += c;
    ASSERT_EQ(r, direct);
    // The same terms cancelled in a different order always reduce to zero.
    std::shuffle(terms.begin(), terms.end(), rng);
    auto z = p;
    for (auto [c, e] : terms) z += LaurentPolynomial::monomial(-c, e);
    ASSERT_TRUE(z.is_zero());
    for (auto c : reduce_mod_power_of_two(z, 7)) ASSERT_EQ(c, 0);
  }
}
