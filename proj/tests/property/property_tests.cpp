#include <gtest/gtest.h>

#include "properties.hpp"

namespace lcann::testing {
namespace {

class PropertySuite : public ::testing::TestWithParam<std::size_t> {};

TEST_P(PropertySuite, HoldsOnRandomCases) {
  const auto& property = property_catalog()[GetParam()];
  auto outcome = run_property(property, property_seed());
  EXPECT_EQ(outcome.cases, property.cases);
  for (const auto& f : outcome.failures) ADD_FAILURE() << property.name << ": " << f;
}

std::string property_name(const ::testing::TestParamInfo<std::size_t>& info) {
  std::string name = property_catalog()[info.param].name;
  for (char& ch : name)
    if (ch == '-') ch = '_';
  return name;
}

INSTANTIATE_TEST_SUITE_P(Catalog, PropertySuite,
                         ::testing::Range<std::size_t>(0, property_catalog().size()), property_name);

TEST(PropertyCatalog, AtLeastOneThousandCases) {
  std::size_t total = 0;
  for (const auto& p : property_catalog()) total += p.cases;
  EXPECT_GE(total, 1000u);
}

}  // namespace
}  // namespace lcann::testing
