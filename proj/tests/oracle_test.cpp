#include <gtest/gtest.h>

#include <random>

#include "ifd/error.hpp"
#include "ifd/dimension.hpp"
#include "ifd/families.hpp"
#include "ifd/oracle.hpp"
#include "reference_tables.hpp"
#include "test_support.hpp"

namespace ifd {
namespace {

using oracle::brute_force_report;
using oracle::compare_reports;

TEST(BruteForce, MixedTwoElement) {
  const auto r = brute_force_report(testing::mixed_two_element());
  EXPECT_FALSE(r.degenerate);
  EXPECT_NEAR(r.entropy, testing::kMixedTwoElement.entropy, testing::kPrintedTolerance);
  EXPECT_NEAR(r.split_scale, testing::kMixedTwoElement.split_scale, testing::kPrintedTolerance);
  EXPECT_NEAR(r.dimension, testing::kMixedTwoElement.dimension, testing::kPrintedTolerance);
}

TEST(BruteForce, DegenerateSingleton) {
  EXPECT_EQ(brute_force_report(testing::single(1, 0b1)), (DimensionReport{0.0, 0.0, 0.0, true}));
}

TEST(BruteForce, UniformPowersetTwelveMatchesGroupedForm) {
  const auto profile = uniform_powerset(12);
  const auto expanded = profile_to_mass(profile);
  ASSERT_EQ(expanded.focal_count(), 4095u);
  EXPECT_TRUE(compare_reports(brute_force_report(expanded), information_dimension_profile(profile), 1e-10));
}

TEST(BruteForce, RejectsLargeFrames) {
  EXPECT_THROW(brute_force_report(testing::single(21, 1)), Error);
}

TEST(CompareReports, Tolerance) {
  const DimensionReport a{1.0, 2.0, 0.5, false};
  EXPECT_TRUE(compare_reports(a, a, 1e-12));
  DimensionReport b = a;
  b.dimension += 1e-6;
  EXPECT_FALSE(compare_reports(a, b, 1e-9));
  DimensionReport c = a;
  c.degenerate = true;
  EXPECT_FALSE(compare_reports(a, c, 1.0));
  EXPECT_THROW(compare_reports(a, a, 0.0), Error);

  const auto md = max_deng(10);
  EXPECT_TRUE(compare_reports(information_dimension_profile(md), brute_force_report(profile_to_mass(md)), 1e-9));
}

TEST(OracleEquivalence, EveryFamilyUpToSixteen) {
  for (Family f : kAllFamilies) {
    for (int n = 1; n <= 16; ++n) {
      const auto profile = make_family(f, n);
      const auto main = information_dimension_profile(profile);
      const auto reference = brute_force_report(profile_to_mass(profile));
      EXPECT_TRUE(compare_reports(main, reference, 1e-9)) << family_name(f) << " N=" << n;
    }
  }
}

TEST(OracleEquivalence, RandomMasses) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 500; ++trial) {
    const auto m = testing::random_mass(rng, 2 + rng() % 5);
    EXPECT_TRUE(compare_reports(information_dimension(m), brute_force_report(m), 1e-10)) << trial;
  }
}

}  // namespace
}  // namespace ifd
