#include <gtest/gtest.h>

#include <fstream>

#include "lcann/ext.hpp"
#include "lcann/groebner.hpp"
#include "lcann/io.hpp"

namespace lcann {
namespace {

RatPoly poly(const std::string& text, int n) { return parse_polynomial(text, n, 1); }

TEST(Groebner, SingleVariable) {
  auto g = groebner({poly("x1", 2)}, 0);
  ASSERT_EQ(g.basis.size(), 1u);
  EXPECT_EQ(g.basis[0], poly("x1", 2));
}

TEST(Groebner, LexExampleReducesToVariables) {
  GroebnerOptions opts;
  opts.order = MonomialOrder::Lex;
  auto g = groebner({poly("x1 - x2^2", 2), poly("x2", 2)}, 0, opts);
  ASSERT_EQ(g.basis.size(), 2u);
  EXPECT_EQ(g.basis[0], poly("x2", 2));
  EXPECT_EQ(g.basis[1], poly("x1", 2));
  EXPECT_TRUE(satisfies_buchberger_criterion(g));
}

TEST(Groebner, TwistedCubicOverQ) {
  auto g = groebner({poly("x1^2 - x2", 3), poly("x1^3 - x3", 3)}, 0);
  EXPECT_TRUE(satisfies_buchberger_criterion(g));
  EXPECT_TRUE(ideal_member(poly("x2^2 - x1*x3", 3), g));
  EXPECT_FALSE(ideal_member(poly("x1", 3), g));
}

TEST(Groebner, MembershipByNormalForm) {
  auto g = groebner({poly("x1", 2)}, 0);
  EXPECT_TRUE(ideal_member(poly("x1*x2", 2), g));
  EXPECT_TRUE(normal_form(poly("x1*x2 + x2", 2), g) == poly("x2", 2));
}

TEST(Groebner, FiniteFieldCoefficients) {
  // x1 + x2 and x1 - x2 generate (x1, x2) unless p = 2.
  auto g2 = groebner({poly("x1 + x2", 2), poly("x1 - x2", 2)}, 2);
  EXPECT_EQ(g2.basis.size(), 1u);
  auto g3 = groebner({poly("x1 + x2", 2), poly("x1 - x2", 2)}, 3);
  EXPECT_EQ(g3.basis.size(), 2u);
  EXPECT_THROW(reduce_mod_p(poly("1/2", 1), 2), AlgebraError);
  EXPECT_EQ(reduce_mod_p(poly("1/2", 1), 3), poly("2", 1));
}

TEST(Groebner, UnitIdeal) {
  auto g = groebner({poly("x1*x2 - 1", 2), poly("x1", 2)}, 0);
  EXPECT_TRUE(g.is_unit_ideal());
}

TEST(Groebner, TimeoutIsEnforced) {
  GroebnerOptions opts;
  opts.timeout = std::chrono::milliseconds(0);
  std::vector<RatPoly> katsura = {poly("x1 + 2*x2 + 2*x3 + 2*x4 - 1", 4),
                                  poly("x1^2 + 2*x2^2 + 2*x3^2 + 2*x4^2 - x1", 4),
                                  poly("2*x1*x2 + 2*x2*x3 + 2*x3*x4 - x2", 4),
                                  poly("x2^2 + 2*x1*x3 + 2*x2*x4 - x3", 4)};
  EXPECT_THROW(groebner(katsura, 0, opts), GroebnerTimeout);
  EXPECT_TRUE(satisfies_buchberger_criterion(groebner(katsura, 32003)));
}

TEST(Radical, Basics) {
  EXPECT_TRUE(radical_member(poly("x1", 1), {poly("x1^2", 1)}, 0));
  EXPECT_FALSE(radical_member(poly("x1", 2), {poly("x2", 2)}, 0));
  EXPECT_TRUE(radical_member(poly("x1 + x2", 2), {poly("x1^2", 2), poly("x2^3", 2)}, 2));
  // (x1 + x2)^2 = x1^2 + x2^2 in characteristic 2 only.
  EXPECT_TRUE(radical_member(poly("x1 + x2", 2), {poly("x1^2 + x2^2", 2)}, 2));
  EXPECT_FALSE(radical_member(poly("x1 + x2", 2), {poly("x1^2 + x2^2", 2)}, 0));
}

TEST(SchmittVogel, ElementsMatchFixture) {
  auto elements = schmitt_vogel_elements();
  ASSERT_EQ(elements.size(), 4u);
  std::ifstream in(std::string(LCANN_FIXTURE_DIR) + "/schmitt_vogel.polys");
  EXPECT_EQ(parse_polynomial_file(in, 0), elements);
  EXPECT_EQ(elements[0].to_string(0), "x0*x3*x5");
  for (const auto& f : elements) EXPECT_TRUE(terms_in_monomial_ideal(f, reisner_ideal()));
  EXPECT_FALSE(terms_in_monomial_ideal(poly("x1*x2", 6), reisner_ideal()));
}

TEST(SchmittVogel, RadicalAgreesOverTwoFields) {
  auto report = sv_containment_check(schmitt_vogel_elements(), reisner_ideal());
  EXPECT_TRUE(report.all_passed());
  EXPECT_TRUE(report.failures().empty());
  EXPECT_EQ(report.elements_in_ideal, std::vector<bool>(4, true));
  ASSERT_EQ(report.radical.size(), 2u);
  EXPECT_EQ(report.radical[0].first, 2u);
  EXPECT_EQ(report.radical[1].first, 0u);
  for (const auto& [ch, flags] : report.radical) {
    EXPECT_EQ(flags.size(), 10u);
    for (bool b : flags) EXPECT_TRUE(b) << "characteristic " << ch;
  }
}

}  // namespace
}  // namespace lcann
