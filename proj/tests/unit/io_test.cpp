#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "lcann/ext.hpp"
#include "lcann/io.hpp"

namespace lcann {
namespace {

template <class F>
std::string error_of(F&& f) {
  try {
    f();
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

TEST(IdealFiles, ParseAndFormat) {
  std::istringstream in("# comment\nvars 3\n1 1 0\n\n0 2 1  # trailing\n");
  auto I = parse_ideal(in);
  EXPECT_EQ(I, MonomialIdeal(3, {{1, 1, 0}, {0, 2, 1}}));
  std::istringstream again(format_ideal(I));
  EXPECT_EQ(parse_ideal(again), I);
}

TEST(IdealFiles, FixtureIsReisner) {
  std::ifstream in(std::string(LCANN_FIXTURE_DIR) + "/reisner.ideal");
  EXPECT_EQ(parse_ideal(in), reisner_ideal());
}

TEST(IdealFiles, LineNumberedErrors) {
  EXPECT_EQ(error_of([] {
              std::istringstream in("vars 2\n1 a\n");
              parse_ideal(in);
            }),
            "line 2: not an integer: 'a'");
  EXPECT_EQ(error_of([] {
              std::istringstream in("vars 2\n1 0\n1 0 1\n");
              parse_ideal(in);
            }),
            "line 3: expected 2 exponents, found 3");
  EXPECT_EQ(error_of([] {
              std::istringstream in("vars 2\n-1 0\n");
              parse_ideal(in);
            }),
            "line 2: exponents must be nonnegative");
  EXPECT_NE(error_of([] {
              std::istringstream in("variables 2\n");
              parse_ideal(in);
            }),
            "");
}

TEST(FacetFiles, ParseAndErrors) {
  std::istringstream in("vertices 4\n0 1 2\n2 3\n");
  auto delta = parse_facets(in);
  EXPECT_EQ(delta.nvertices(), 4);
  EXPECT_EQ(delta.facets(), (std::vector<std::vector<int>>{{0, 1, 2}, {2, 3}}));
  EXPECT_EQ(error_of([] {
              std::istringstream bad("vertices 3\n0 1\n1 5\n");
              parse_facets(bad);
            }),
            "line 3: vertex 5 exceeds the vertex count");
  EXPECT_EQ(error_of([] {
              std::istringstream bad("0 0 1\n");
              parse_facets(bad);
            }),
            "line 1: repeated vertex");
}

TEST(Polynomials, Parse) {
  auto f = parse_polynomial("3*x1^2*x3 - x2 + 5/2", 3, 1);
  EXPECT_EQ(f.to_string(1), "3*x1^2*x3 - x2 + 5/2");
  EXPECT_EQ(parse_polynomial("x0 x1", 2, 0).to_string(0), "x0*x1");
  EXPECT_THROW(parse_polynomial("x4", 3, 1), InputError);
  EXPECT_THROW(parse_polynomial("1/0", 1, 1), InputError);
  EXPECT_THROW(parse_polynomial("3 +", 1, 1), InputError);
}

TEST(Polynomials, DvrGenerators) {
  std::istringstream in("3*x1 + 5*x2\n25\n");
  auto gens = parse_dvr_generators(in, 5);
  ASSERT_EQ(gens.size(), 2u);
  EXPECT_EQ(gens[0].nvars(), 2);
  EXPECT_EQ(gens[1].leading_term().coeff.val(), 2);
  std::istringstream bad("x1\nx1 +* 2\n");
  EXPECT_EQ(error_of([&] { parse_dvr_generators(bad, 5); }).substr(0, 7), "line 2:");
}

TEST(Filtrations, HeaderAndTails) {
  EXPECT_EQ(error_of([] {
              std::istringstream in("p 2\n");
              parse_filtration(in);
            }),
            "line 1: expected header 'filtration v1'");
  std::istringstream tail("filtration v1\np 2\ntier\nbase quotient 1\nwindow -1 0\nshifts 1 0\ntail-below sideways\n");
  EXPECT_EQ(error_of([&] { parse_filtration(tail); }), "line 7: tail must be shift, stable or wild");
  std::istringstream ok(
      "filtration v1\np 3\ntier\nbase lattice pi-inverted\nlabel R_g\nwindow -1 1\nshifts 1 0 -1\n"
      "tail-below shift\ntail-above shift\nend\n");
  auto spec = parse_filtration(ok);
  ASSERT_EQ(spec.tiers.size(), 1u);
  EXPECT_EQ(spec.tiers[0].base.label, "R_g");
  EXPECT_EQ(spec.tiers[0].shifts, (std::vector<int>{1, 0, -1}));
}

TEST(IntLists, BothSeparators) {
  EXPECT_EQ(parse_int_list("-1,-1,0"), (std::vector<int>{-1, -1, 0}));
  EXPECT_EQ(parse_int_list("-1 -1 0"), (std::vector<int>{-1, -1, 0}));
  EXPECT_THROW(parse_int_list("1,x"), InputError);
}

}  // namespace
}  // namespace lcann
