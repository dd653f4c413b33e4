#include <gtest/gtest.h>

#include <cmath>

#include "ifd/error.hpp"
#include "ifd/combinatorics.hpp"
#include "ifd/dimension.hpp"
#include "ifd/entropy.hpp"
#include "ifd/families.hpp"

namespace ifd {
namespace {

constexpr double kPrinted = 5e-5;

double total_mass(const CardinalityProfile& p) {
  double total = 0.0;
  for (const auto& r : p.rows()) total += std::exp(r.set_count.log + r.log_per_set_mass);
  return total;
}

TEST(Vacuous, Rows) {
  const auto p = vacuous(2);
  ASSERT_EQ(p.rows().size(), 1u);
  EXPECT_EQ(p.rows()[0].cardinality, 2);
  EXPECT_EQ(p.rows()[0].set_count.exact, 1u);
  EXPECT_EQ(p.rows()[0].per_set_mass, 1.0);
  EXPECT_NEAR(deng_entropy_profile(p), 1.5850, kPrinted);

  EXPECT_TRUE(information_dimension_profile(vacuous(1)).degenerate);
  EXPECT_NEAR(information_dimension_profile(vacuous(20)).dimension, 1.0, 1e-12);
}

TEST(UniformBayesian, Rows) {
  const auto six = information_dimension_profile(uniform_bayesian(6));
  EXPECT_NEAR(six.entropy, 2.5850, kPrinted);
  EXPECT_NEAR(six.dimension, 1.0, 1e-12);
  EXPECT_TRUE(information_dimension_profile(uniform_bayesian(1)).degenerate);
  const auto two = information_dimension_profile(uniform_bayesian(2));
  EXPECT_NEAR(two.entropy, 1.0, 1e-15);
  EXPECT_NEAR(two.dimension, 1.0, 1e-15);
}

TEST(UniformBayesian, IsBayesianWithUnitDimension) {
  for (int n = 1; n <= 12; ++n) {
    EXPECT_TRUE(mass_is_bayesian(profile_to_mass(uniform_bayesian(n))));
    const double d = information_dimension_profile(uniform_bayesian(n)).dimension;
    EXPECT_NEAR(d, n == 1 ? 0.0 : 1.0, 1e-12) << n;
  }
  EXPECT_NEAR(information_dimension_profile(uniform_bayesian(1000)).dimension, 1.0, 1e-12);
}

TEST(UniformPowerset, Rows) {
  EXPECT_NEAR(information_dimension_profile(uniform_powerset(4)).dimension, 1.3811, kPrinted);
  EXPECT_NEAR(information_dimension_profile(uniform_powerset(25)).dimension, 1.5000, kPrinted);
  EXPECT_TRUE(information_dimension_profile(uniform_powerset(1)).degenerate);
  EXPECT_THROW(uniform_powerset(kDefaultProfileLimit + 1), Error);
  EXPECT_THROW(uniform_powerset(0), Error);
}

TEST(MaxDeng, Rows) {
  EXPECT_NEAR(information_dimension_profile(max_deng(3)).dimension, 1.3672, kPrinted);
  EXPECT_NEAR(information_dimension_profile(max_deng(15)).dimension, 1.5847, kPrinted);
  const auto two = max_deng(2);
  EXPECT_NEAR(two.row(1)->per_set_mass, 1.0 / 5.0, 1e-16);
  EXPECT_NEAR(two.row(2)->per_set_mass, 3.0 / 5.0, 1e-16);
  EXPECT_EQ(two.row(1)->set_count.exact, 2u);
  EXPECT_THROW(max_deng(kDefaultProfileLimit + 1), Error);
}

TEST(FamilyProperty, RationalMassSumIsExact) {
  // Per-set masses are c_k / D with integer numerators; check sum_k C(n,k) c_k == D exactly.
  for (int n = 1; n <= 40; ++n) {
    const auto up = uniform_powerset(n);
    const auto md = max_deng(n);
    unsigned __int128 up_sum = 0;
    unsigned __int128 md_sum = 0;
    for (int k = 1; k <= n; ++k) {
      const auto c = *combinatorics::binomial_exact(n, k);
      EXPECT_EQ(up.row(k)->set_count.exact, c);
      EXPECT_EQ(md.row(k)->set_count.exact, c);
      up_sum += c;
      md_sum += static_cast<unsigned __int128>(c) * ((std::uint64_t{1} << k) - 1);
    }
    EXPECT_TRUE(up_sum == (static_cast<unsigned __int128>(1) << n) - 1) << n;
    EXPECT_TRUE(md_sum == combinatorics::three_pow_minus_two_pow(n)) << n;
  }
}

TEST(FamilyProperty, FloatingMassSumWithinTolerance) {
  for (Family f : kAllFamilies) {
    for (int n : {1, 2, 5, 10, 25, 40, 41, 64, 65, 100, 500, 1024}) {
      EXPECT_NEAR(total_mass(make_family(f, n)), 1.0, n <= 64 ? 1e-12 : 1e-9)
          << family_name(f) << " n=" << n;
    }
  }
}

TEST(FamilyProperty, MaxDengAttainsMaximum) {
  for (int n = 1; n <= 25; ++n) {
    EXPECT_NEAR(deng_entropy_profile(max_deng(n)), max_deng_entropy(n), 1e-10) << n;
  }
}

TEST(FamilyProperty, LargeFramesUseLogCounts) {
  const auto p = uniform_powerset(100);
  EXPECT_FALSE(p.row(50)->set_count.exact.has_value());
  EXPECT_NEAR(p.row(50)->set_count.log, combinatorics::log_binomial(100, 50), 1e-9);
  EXPECT_NEAR(information_dimension_profile(p).dimension, 1.5, 1e-6);
  EXPECT_NEAR(information_dimension_profile(max_deng(1024)).dimension, std::log2(3.0), 1e-9);
}

TEST(FamilyNames, RoundTrip) {
  for (Family f : kAllFamilies) EXPECT_EQ(parse_family(family_name(f)), f);
  EXPECT_EQ(parse_family("max-deng"), Family::MaxDeng);
  try {
    parse_family("bogus");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnknownFamily);
  }
}

TEST(Combinatorics, Binomials) {
  EXPECT_EQ(combinatorics::binomial_exact(64, 32), 1832624140942590534ULL);
  EXPECT_EQ(combinatorics::binomial_exact(5, 7), 0u);
  EXPECT_FALSE(combinatorics::binomial_exact(65, 2).has_value());
  EXPECT_NEAR(combinatorics::log_binomial(65, 2), std::log(2080.0), 1e-12);
  EXPECT_EQ(combinatorics::three_pow_minus_two_pow(40), 12157665459056928801ULL - (1ULL << 40));
  EXPECT_THROW(combinatorics::three_pow_minus_two_pow(41), Error);
  EXPECT_NEAR(combinatorics::log_pow2_minus_one(60), std::log(std::ldexp(1.0, 60) - 1.0), 1e-12);
}

}  // namespace
}  // namespace ifd
