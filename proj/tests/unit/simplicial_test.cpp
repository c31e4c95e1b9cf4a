#include <gtest/gtest.h>

#include <fstream>

#include "lcann/ext.hpp"
#include "lcann/io.hpp"
#include "lcann/simplicial.hpp"

namespace lcann {
namespace {

SimplicialComplex rp2() { return stanley_reisner_complex(reisner_ideal()); }

TEST(StanleyReisner, ReisnerGivesSixVertexProjectivePlane) {
  auto delta = rp2();
  EXPECT_EQ(delta.f_vector(), (std::vector<std::size_t>{1, 6, 15, 10}));
  EXPECT_EQ(delta.facet_masks().size(), 10u);
  EXPECT_EQ(delta.dimension(), 2);
  std::ifstream in(std::string(LCANN_FIXTURE_DIR) + "/rp2_6.facets");
  EXPECT_EQ(parse_facets(in), delta);
}

TEST(StanleyReisner, TwoIsolatedPoints) {
  auto delta = stanley_reisner_complex(MonomialIdeal(2, {{1, 1}}));
  EXPECT_EQ(delta.facets(), (std::vector<std::vector<int>>{{0}, {1}}));
}

TEST(StanleyReisner, RoundTrip) {
  EXPECT_TRUE(nonface_ideal(rp2()).same_ideal(reisner_ideal()));
  MonomialIdeal I(5, {{1, 1, 0, 0, 0}, {0, 0, 1, 1, 1}, {1, 0, 0, 0, 1}});
  EXPECT_TRUE(nonface_ideal(stanley_reisner_complex(I)).same_ideal(I));
  EXPECT_THROW(stanley_reisner_complex(MonomialIdeal(2, {{2, 0}})), AlgebraError);
}

TEST(ReducedCohomology, SimplexIsAcyclic) {
  SimplicialComplex simplex(3, {{0, 1, 2}});
  auto h = reduced_cohomology(simplex, 0);
  for (int d = -1; d <= 2; ++d) EXPECT_TRUE(h.group(d).is_trivial()) << d;
}

TEST(ReducedCohomology, ProjectivePlaneOverIntegers) {
  auto h = reduced_cohomology(rp2(), 0);
  EXPECT_TRUE(h.group(-1).is_trivial());
  EXPECT_TRUE(h.group(0).is_trivial());
  EXPECT_TRUE(h.group(1).is_trivial());
  EXPECT_EQ(h.group(2), (FinAbGroup{0, {2}}));
  EXPECT_EQ(h.last_degree(), 2);
}

TEST(ReducedCohomology, ProjectivePlaneOverFields) {
  auto f2 = reduced_cohomology(rp2(), 2), f3 = reduced_cohomology(rp2(), 3);
  EXPECT_EQ(f2.dimension(0), 0u);
  EXPECT_EQ(f2.dimension(1), 1u);
  EXPECT_EQ(f2.dimension(2), 1u);
  for (int d = -1; d <= 2; ++d) EXPECT_EQ(f3.dimension(d), 0u);
  EXPECT_EQ(rational_betti(rp2()), (std::vector<std::size_t>{0, 0, 0, 0}));
}

TEST(ReducedCohomology, EmptyConventions) {
  auto only_empty = reduced_cohomology(SimplicialComplex::empty_face_only(3), 0);
  EXPECT_EQ(only_empty.group(-1), (FinAbGroup{1, {}}));
  EXPECT_EQ(reduced_cohomology(SimplicialComplex::empty_face_only(3), 5).dimension(-1), 1u);
  auto nothing = reduced_cohomology(SimplicialComplex::void_complex(3), 0);
  EXPECT_TRUE(nothing.group(-1).is_trivial());
  EXPECT_EQ(SimplicialComplex::void_complex(3).dimension(), -2);
  EXPECT_EQ(SimplicialComplex::empty_face_only(3).dimension(), -1);
}

TEST(Link, Conventions) {
  auto delta = rp2();
  EXPECT_EQ(link(delta, 0), delta);
  EXPECT_EQ(link(delta, delta.facet_masks().front()), SimplicialComplex::empty_face_only(6));
  EXPECT_TRUE(link(delta, vertex_mask({0, 1, 2})).is_void());
}

TEST(Link, EveryVertexLinkIsAPentagon) {
  auto delta = rp2();
  for (int v = 0; v < 6; ++v) {
    auto lk = link(delta, vertex_mask({v}));
    EXPECT_EQ(lk.f_vector(), (std::vector<std::size_t>{1, 5, 5})) << v;
    for (std::uint32_t vertex : lk.faces(0)) {
      std::size_t degree = 0;
      for (std::uint32_t edge : lk.faces(1))
        if (edge & vertex) ++degree;
      EXPECT_EQ(degree, 2u);
    }
    auto h = reduced_cohomology(lk, 0);
    EXPECT_TRUE(h.group(0).is_trivial());
    EXPECT_EQ(h.group(1), (FinAbGroup{1, {}}));
  }
}

TEST(Hochster, CharacteristicTwoDefect) {
  EXPECT_EQ(hochster_local_cohomology_piece(rp2(), 2, MultiIndex(6, 0), 2), 1u);
  EXPECT_EQ(hochster_local_cohomology_piece(rp2(), 3, MultiIndex(6, 0), 2), 1u);
}

TEST(Hochster, CohenMacaulayInCharacteristicThree) {
  auto delta = rp2();
  for (int i = 0; i <= 2; ++i)
    for (const auto& a : DegreeBox::cube(6, -1, 0).points())
      EXPECT_EQ(hochster_local_cohomology_piece(delta, i, a, 3), 0u) << i << " " << format_multi_index(a);
  // The top module is nonzero: a facet has link {∅}.
  MultiIndex a(6, 0);
  a[0] = a[1] = a[4] = -1;
  EXPECT_EQ(hochster_local_cohomology_piece(delta, 3, a, 3), 1u);
}

TEST(Hochster, NonFaceSupportVanishes) {
  MultiIndex a(6, 0);
  a[0] = a[1] = a[2] = -2;  // 012 is a generator of I, not a face
  for (int i = 0; i <= 4; ++i) EXPECT_EQ(hochster_local_cohomology_piece(rp2(), i, a, 2), 0u);
  EXPECT_THROW(hochster_local_cohomology_piece(rp2(), 2, {1, 0, 0, 0, 0, 0}, 2), AlgebraError);
}

}  // namespace
}  // namespace lcann
