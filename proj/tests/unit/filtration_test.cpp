#include <gtest/gtest.h>

#include <sstream>

#include "lcann/filtration.hpp"
#include "lcann/io.hpp"

namespace lcann {
namespace {

DvrPoly dvr(std::uint64_t p, int n, std::vector<std::pair<MultiIndex, long>> terms) {
  std::vector<Term<DvrScalar>> t;
  for (auto& [e, c] : terms) t.push_back({e, DvrScalar(p, c)});
  return DvrPoly::from_terms(n, std::move(t));
}

TEST(QuotientFiltration, LengthsAndAnnihilators) {
  for (int ell = 1; ell <= 3; ++ell) {
    auto spec = build_filtration_quotient(2, ell);
    ASSERT_TRUE(check_axioms(spec).ok());
    auto v = finite_type_and_verdict(spec);
    EXPECT_TRUE(v.finite_length);
    EXPECT_EQ(v.length_bound, ell);
    ASSERT_EQ(v.bounds.size(), 1u);
    EXPECT_EQ(v.bounds[0], std::make_pair(-ell, 0));
  }
  EXPECT_EQ(finite_type_and_verdict(build_filtration_quotient(2, 1)).annihilator(2), "contains (2)");
  EXPECT_EQ(finite_type_and_verdict(build_filtration_quotient(2, 3)).annihilator(2), "contains (2^3)");
}

TEST(QuotientFiltration, TwoStepForLengthOne) {
  auto spec = build_filtration_quotient(3, 1);
  const auto& t = spec.tiers.at(0);
  EXPECT_TRUE(t.base.is_zero_layer(*t.shift_at(-1)));
  EXPECT_TRUE(t.base.is_full_layer(*t.shift_at(0)));
}

TEST(LocalizationFiltration, VariableHasOnlyAnUpperBound) {
  auto spec = build_filtration_localization(dvr(2, 1, {{{1}, 1}}));
  const auto& t = spec.tiers.at(0);
  EXPECT_FALSE(tight_lower_bound(t).has_value());
  EXPECT_EQ(tight_upper_bound(t), 0);
  auto v = finite_type_and_verdict(spec);
  EXPECT_FALSE(v.finite_length);
  EXPECT_EQ(v.annihilator(2), "(0)");
}

TEST(LocalizationFiltration, UniformizerHasNoBounds) {
  for (auto f : {dvr(2, 1, {{{0}, 2}}), dvr(2, 1, {{{1}, 4}})}) {
    auto spec = build_filtration_localization(f);
    const auto& t = spec.tiers.at(0);
    EXPECT_TRUE(t.base.pi_inverted);
    EXPECT_FALSE(tight_lower_bound(t).has_value());
    EXPECT_FALSE(tight_upper_bound(t).has_value());
    EXPECT_EQ(finite_type_and_verdict(spec).annihilator(2), "(0)");
  }
  EXPECT_THROW(build_filtration_localization(DvrPoly(1)), AlgebraError);
}

TEST(LocalizationFiltration, MembershipExample) {
  // (pi x1) / x1^2 with f = x1: nu = 1 so it lies in N_{-1} and not N_{-2}.
  LocalizedElement x(dvr(2, 1, {{{1}, 1}}), dvr(2, 1, {{{1}, 2}}), 2);
  EXPECT_EQ(x.f_power(), 1);  // canonical form pi / x1
  EXPECT_TRUE(x.in_layer(-1));
  EXPECT_FALSE(x.in_layer(-2));
  EXPECT_EQ(x.layer_index(), -1);
  EXPECT_EQ(x.times_pi().layer_index(), -2);
}

TEST(LocalizationFiltration, ContentSplit) {
  auto [e, g] = pi_content_split(dvr(3, 2, {{{1, 0}, 9}, {{0, 1}, 18}}));
  EXPECT_EQ(e, 2);
  EXPECT_EQ(g, dvr(3, 2, {{{1, 0}, 1}, {{0, 1}, 2}}));
}

TEST(Axioms, InjectedShiftJumpBreaksConditionThree) {
  auto spec = build_filtration_quotient(2, 3);
  spec.tiers[0].shifts = {3, 1, 1, 0};
  auto report = check_axioms(spec);
  EXPECT_TRUE(report.fails(3));
  EXPECT_THROW(finite_type_and_verdict(spec), AlgebraError);
}

TEST(Axioms, WildUnboundedTailBreaksConditionFive) {
  auto spec = build_filtration_localization(dvr(2, 1, {{{1}, 1}}));
  spec.tiers[0].below = Tail::Wild;
  auto report = check_axioms(spec);
  EXPECT_TRUE(report.fails(5));
  EXPECT_FALSE(report.fails(3));
}

TEST(Axioms, DecreasingLayersBreakConditionOne) {
  auto spec = build_filtration_quotient(2, 2);
  spec.tiers[0].shifts = {1, 2, 0};
  EXPECT_TRUE(check_axioms(spec).fails(1));
}

TEST(Axioms, FalseDeclaredBoundIsReported) {
  auto spec = build_filtration_quotient(2, 2);
  spec.tiers[0].upper_bound = -1;
  EXPECT_TRUE(check_axioms(spec).fails(0));
}

TEST(Filtration, ConcatenationAddsLengths) {
  auto v = finite_type_and_verdict(concat(build_filtration_quotient(2, 2), build_filtration_quotient(2, 3)));
  EXPECT_TRUE(v.finite_length);
  EXPECT_EQ(v.length_bound, 5);
  auto mixed = concat(build_filtration_quotient(2, 2), build_filtration_localization(dvr(2, 1, {{{1}, 1}})));
  EXPECT_FALSE(finite_type_and_verdict(mixed).finite_length);
}

TEST(Filtration, SerializationRoundTrip) {
  auto spec = concat(build_filtration_quotient(5, 2), build_filtration_localization(dvr(5, 1, {{{1}, 5}})));
  std::istringstream in(format_filtration(spec));
  auto back = parse_filtration(in);
  EXPECT_EQ(format_filtration(back), format_filtration(spec));
  EXPECT_EQ(finite_type_and_verdict(back).annihilator(5), "(0)");
}

}  // namespace
}  // namespace lcann
