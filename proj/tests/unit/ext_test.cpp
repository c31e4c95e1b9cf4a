#include <gtest/gtest.h>

#include "lcann/ext.hpp"
#include "oracles.hpp"

namespace lcann {
namespace {

const FinAbGroup kZ2{0, {2}};
const FinAbGroup kZ{1, {}};

class ReisnerExt : public ::testing::Test {
 protected:
  static ExtCalculator& calc() {
    static ExtCalculator c(reisner_ideal());
    return c;
  }
};

TEST(DegreeBoxes, CubeAndShell) {
  auto box = DegreeBox::cube(2, -1, 0);
  EXPECT_EQ(box.count(), 4u);
  EXPECT_EQ(box.points(), (std::vector<MultiIndex>{{-1, -1}, {-1, 0}, {0, -1}, {0, 0}}));
  EXPECT_EQ(box.to_string(), "[-1,0]x[-1,0]");
  EXPECT_EQ(box.enlarged(1).count(), 16u);
  EXPECT_TRUE(box.contains({0, -1}));
  EXPECT_FALSE(box.contains({1, -1}));
  EXPECT_EQ(default_box(MonomialIdeal(2, {{2, 0}, {1, 3}})).to_string(), "[-2,0]x[-3,0]");
}

TEST_F(ReisnerExt, HomVanishes) {
  auto scan = ext_support_scan(calc(), 0, default_box(reisner_ideal()));
  EXPECT_TRUE(scan.pieces.empty());
  EXPECT_TRUE(scan.shell_clean());
}

TEST_F(ReisnerExt, Ext4IsResidueField) {
  auto scan = ext_support_scan(calc(), 4, default_box(reisner_ideal()));
  ASSERT_EQ(scan.pieces.size(), 1u);
  EXPECT_EQ(scan.pieces[0].alpha, MultiIndex(6, -1));
  EXPECT_EQ(scan.pieces[0].group, kZ2);
  EXPECT_TRUE(scan.shell_clean());
  for (int i = 0; i < 6; ++i) EXPECT_TRUE(mult_map(calc(), 4, MultiIndex(6, -1), i).zero) << "x" << i;
}

TEST_F(ReisnerExt, FrozenSupportCounts) {
  // Pieces in [-1,0]^6 for j = 0..6.
  const std::vector<std::size_t> expected = {0, 0, 0, 31, 1, 0, 0};
  auto box = default_box(reisner_ideal());
  for (int j = 0; j <= 6; ++j)
    EXPECT_EQ(ext_support_scan(calc(), j, box).pieces.size(), expected[static_cast<std::size_t>(j)]) << "j=" << j;
}

TEST_F(ReisnerExt, Ext3IsFreeAwayFromTheCorner) {
  auto scan = ext_support_scan(calc(), 3, default_box(reisner_ideal()));
  for (const auto& p : scan.pieces) {
    EXPECT_EQ(p.group, kZ);
    EXPECT_NE(p.alpha, MultiIndex(6, -1));
  }
  // Not finite length: the x_i act isomorphically past degree zero.
  EXPECT_FALSE(scan.shell_clean());
}

TEST_F(ReisnerExt, Ext5MatchesPermutedGenerators) {
  auto gens = reisner_ideal().generators();
  std::reverse(gens.begin(), gens.end());
  std::rotate(gens.begin(), gens.begin() + 3, gens.end());
  ExtCalculator other(MonomialIdeal(6, gens));
  auto box = default_box(reisner_ideal());
  for (int j : {1, 5}) {
    auto a = ext_support_scan(calc(), j, box), b = ext_support_scan(other, j, box);
    ASSERT_EQ(a.pieces.size(), b.pieces.size());
    for (std::size_t k = 0; k < a.pieces.size(); ++k) {
      EXPECT_EQ(a.pieces[k].alpha, b.pieces[k].alpha);
      EXPECT_EQ(a.pieces[k].group, b.pieces[k].group);
    }
  }
}

TEST_F(ReisnerExt, AgreesWithLocalDuality) {
  for (std::uint64_t p : {2u, 3u})
    for (int j = 2; j <= 5; ++j)
      for (const auto& alpha : DegreeBox::cube(6, -1, 0).points())
        ASSERT_EQ(testing::ext_dim_mod_p(calc(), j, alpha, p),
                  testing::ext_dim_by_duality(reisner_ideal(), j, alpha, p))
            << "p=" << p << " j=" << j << " alpha=" << format_multi_index(alpha);
}

TEST_F(ReisnerExt, StrandMatricesAreSigned) {
  auto s = calc().strand_matrices(4, MultiIndex(6, -1));
  // 4-subsets of the triples whose union is every vertex.
  EXPECT_EQ(s.basis.size(), 180u);
  EXPECT_TRUE((s.outgoing * s.incoming).is_zero());
}

TEST(Ext, LevelTwoTruncatedPresentation) {
  ExtCalculator calc(power_ideal(reisner_ideal(), 2));
  auto scan = ext_support_scan(calc, 4, DegreeBox::cube(6, -2, 0));
  ASSERT_EQ(scan.pieces.size(), 64u);
  for (const auto& p : scan.pieces) {
    EXPECT_EQ(p.group, kZ2);
    EXPECT_TRUE(p.group.killed_by(2));
    EXPECT_TRUE(DegreeBox::cube(6, -2, -1).contains(p.alpha));
  }
  EXPECT_TRUE(scan.shell_clean());
}

TEST(Ext, TransitionAtTheSocle) {
  auto t = transition_map(reisner_ideal(), 1, 4, MultiIndex(6, -1));
  EXPECT_EQ(t.source, kZ2);
  EXPECT_EQ(t.target, kZ2);
  EXPECT_TRUE(t.injective);
  auto trivial = transition_map(reisner_ideal(), 1, 0, MultiIndex(6, -1));
  EXPECT_TRUE(trivial.source.is_trivial());
  EXPECT_TRUE(trivial.injective);
}

TEST(Ext, BoxBelowTheLcmIsEmpty) {
  MonomialIdeal I(2, {{2, 1}, {0, 2}});
  ExtCalculator calc(I);
  DegreeBox far{{{-5, -3}, {-2, 0}}};
  for (int j = 0; j <= 2; ++j) EXPECT_TRUE(ext_support_scan(calc, j, far).pieces.empty());
}

TEST(Ext, PrincipalIdeal) {
  // Ext^1(A/(x1), A) = A/(x1) shifted to degree -1 in x1: Z in every degree (-1, a2>=0).
  ExtCalculator calc(MonomialIdeal(2, {{1, 0}}));
  EXPECT_EQ(calc.piece(1, {-1, 0}).group, kZ);
  EXPECT_EQ(calc.piece(1, {-1, 5}).group, kZ);
  EXPECT_TRUE(calc.piece(1, {0, 0}).group.is_trivial());
  EXPECT_TRUE(calc.piece(0, {-1, 0}).group.is_trivial());
}

TEST(Ext, ThreadCountDoesNotChangeScans) {
  ExtCalculator a(power_ideal(reisner_ideal(), 2)), b(power_ideal(reisner_ideal(), 2));
  auto box = DegreeBox::cube(6, -2, 0);
  auto one = ext_support_scan(a, 3, box, {1}), four = ext_support_scan(b, 3, box, {4});
  ASSERT_EQ(one.pieces.size(), four.pieces.size());
  for (std::size_t k = 0; k < one.pieces.size(); ++k) EXPECT_EQ(one.pieces[k].alpha, four.pieces[k].alpha);
  EXPECT_EQ(one.shell_nonzero, four.shell_nonzero);
}

TEST(Pipeline, ReisnerLevelTwo) {
  auto rep = reisner_pipeline(reisner_ideal(), {2, 2, 4, 1});
  EXPECT_FALSE(rep.failing_stage) << *rep.failing_stage;
  EXPECT_EQ(rep.verdict.to_string(2), "(2)");
  EXPECT_TRUE(rep.residue_field_at_level_one.value_or(false));
  EXPECT_TRUE(rep.truncated_presentation.value_or(false));
  EXPECT_TRUE(rep.transition_is_product_of_variables.value_or(false));
  ASSERT_EQ(rep.levels.size(), 2u);
  EXPECT_EQ(rep.levels[1].nonzero_pieces, 64u);
}

TEST(Pipeline, OddPrimeSeesNoTorsion) {
  auto rep = reisner_pipeline(reisner_ideal(), {3, 1, 4, 1});
  // The 3-primary part of every level is zero, so the localized module vanishes.
  EXPECT_EQ(rep.verdict.kind, AnnihilatorIdeal::Kind::Unit);
  EXPECT_FALSE(rep.residue_field_at_level_one.value_or(true));
}

TEST(Pipeline, PrincipalIdealIsInconclusive) {
  auto rep = reisner_pipeline(MonomialIdeal(2, {{1, 0}}), {2, 2, 1, 1});
  EXPECT_TRUE(rep.levels[0].has_free);
  EXPECT_NE(rep.verdict.kind, AnnihilatorIdeal::Kind::PiPower);
}

TEST(Localize, PrimaryPart) {
  FinAbGroup g{1, {2, 12}};
  EXPECT_EQ(localize_at(g, 2), (FinAbGroup{1, {2, 4}}));
  EXPECT_EQ(localize_at(g, 3), (FinAbGroup{1, {3}}));
}

}  // namespace
}  // namespace lcann
