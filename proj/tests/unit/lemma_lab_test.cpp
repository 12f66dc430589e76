#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "uncond/errors.hpp"
#include "uncond/lemma_lab.hpp"
#include "uncond/witness.hpp"

namespace uncond {
namespace {

using testing::Gen;
using cd = std::complex<double>;
Exponent E(double v) { return Exponent::finite(v); }

TEST(RealSubsetRatioTest, Examples) {
  const std::vector<double> a{1, -1};
  EXPECT_EQ(real_subset_ratio(a).ratio, 2.0);
  EXPECT_EQ(real_subset_ratio(a).slack, 0.0);
  const std::vector<double> b{1, 1};
  EXPECT_EQ(real_subset_ratio(b).ratio, 1.0);
  const std::vector<double> c{3, -4, 5};
  EXPECT_EQ(real_subset_ratio(c).ratio, 1.5);
  EXPECT_EQ(real_subset_ratio(c).bound, 2.0);
}

TEST(RealSubsetRatioTest, Degenerate) {
  const std::vector<double> z{0, 0};
  EXPECT_THROW(real_subset_ratio(z), DomainError);
  EXPECT_THROW(real_subset_ratio(std::vector<double>{}), DomainError);
}

TEST(RealSubsetProperty, SplitEqualsEnumerationAndRatioAtMostTwo) {
  Gen gen(21);
  for (int t = 0; t < 1500; ++t) {
    const std::size_t n = gen.size(1, 16);
    const auto x = gen.vec(n);
    testing::Rows rows;
    for (double v : x) rows.push_back({v});
    EXPECT_NEAR(real_subset_max(x), testing::brute_subset_max(rows, 1.0), 1e-12 * (1 + real_subset_max(x)));
    if (real_subset_max(x) > 0) EXPECT_LE(real_subset_ratio(x).ratio, 2.0 + kNumEps);
  }
  for (double c : {0.5, 3.0, 1e6}) {
    const std::vector<double> pair{c, -c};
    EXPECT_EQ(real_subset_ratio(pair).ratio, 2.0);
  }
}

TEST(ComplexSubsetRatioTest, RootsOfUnity) {
  const auto four = testing::roots_of_unity(4);
  const auto rep = complex_subset_ratio(four);
  EXPECT_NEAR(rep.ratio, 2 * std::sqrt(2.0), 1e-12);
  EXPECT_TRUE(rep.certified);
  EXPECT_EQ(rep.bound, 4.0);
  ASSERT_TRUE(rep.sharp_bound.has_value());
  EXPECT_EQ(*rep.sharp_bound, 3.141592653589793);

  EXPECT_EQ(complex_subset_ratio(std::vector<cd>{cd{1, 0}}).ratio, 1.0);

  const auto sixty_four = testing::roots_of_unity(64);
  const auto big = complex_subset_ratio(sixty_four);
  EXPECT_FALSE(big.certified);
  EXPECT_GE(big.ratio, 3.0);
  EXPECT_LE(big.ratio, std::numbers::pi + 1e-9);
  EXPECT_NEAR(big.ratio, 64 * std::sin(std::numbers::pi / 64), 1e-12);
  EXPECT_NEAR(complex_subset_max_half_plane(sixty_four), testing::arc_scan_complex_max(sixty_four), 1e-12);
}

TEST(ComplexSubsetRatioTest, Degenerate) {
  EXPECT_THROW(complex_subset_ratio(std::vector<cd>{cd{}, cd{}}), DomainError);
}

TEST(ComplexSubsetProperty, ArcScanHalfPlaneAndEnumerationAgree) {
  for (std::size_t n = 1; n <= 16; ++n) {
    const auto z = testing::roots_of_unity(n);
    const double exact = testing::brute_complex_subset_max(z);
    EXPECT_NEAR(complex_subset_max_exhaustive(z), exact, 1e-12);
    EXPECT_NEAR(testing::arc_scan_complex_max(z), exact, 1e-12);
    EXPECT_NEAR(complex_subset_max_half_plane(z), exact, 1e-12);
  }
  Gen gen(88);
  for (int t = 0; t < 300; ++t) {
    std::vector<cd> z(gen.size(1, 12));
    for (auto& w : z) w = {gen.gaussian(), gen.gaussian()};
    const double exact = testing::brute_complex_subset_max(z);
    EXPECT_NEAR(complex_subset_max_exhaustive(z), exact, 1e-12 * (1 + exact));
    EXPECT_NEAR(complex_subset_max_half_plane(z), exact, 1e-12 * (1 + exact));
    const auto rep = complex_subset_ratio(z);
    EXPECT_LE(rep.ratio, 4.0);
    EXPECT_LE(rep.ratio, std::numbers::pi + kNumEps);
  }
}

TEST(GrothendieckRatioTest, Examples) {
  const auto pair = grothendieck_ratio(Family::from_rows({{1, 1}, {1, -1}}));
  EXPECT_NEAR(pair.ratio, std::sqrt(2.0), 1e-12);
  EXPECT_EQ(pair.bound, kGrothendieckUpper);
  EXPECT_FALSE(pair.critical_finding);

  EXPECT_EQ(grothendieck_ratio(Family::from_rows({{1, 0, 0}})).ratio, 1.0);

  const Family h4 = sylvester(2).rows_as_family();
  testing::Rows rows;
  for (const auto& v : h4) rows.push_back(v.vector());
  const double oracle = 8.0 / testing::brute_sign_max_l1(rows);
  EXPECT_DOUBLE_EQ(grothendieck_ratio(h4).ratio, oracle);
  EXPECT_EQ(oracle, 1.0);
}

TEST(GrothendieckRatioTest, Degenerate) {
  EXPECT_THROW(grothendieck_ratio(Family::from_rows({{0, 0}})), DomainError);
}

TEST(GrothendieckRatioTest, CriticalFindingFlag) {
  // configured bound deliberately below sqrt(2)
  const auto rep = grothendieck_ratio(Family::from_rows({{1, 1}, {1, -1}}), 1.2);
  EXPECT_TRUE(rep.critical_finding);
}

TEST(GrothendieckSearchTest, ReachesHadamardPair) {
  const auto rep = grothendieck_search(2, 2, 1000, 5);
  EXPECT_GE(rep.ratio, std::sqrt(2.0) - kNumEps);
  EXPECT_LE(rep.ratio, kGrothendieckUpper + kNumEps);
  EXPECT_FALSE(rep.critical_finding);
}

TEST(GrothendieckSearchTest, BudgetZero) { EXPECT_THROW(grothendieck_search(2, 2, 0, 1), DomainError); }

TEST(GrothendieckSearchProperty, NondecreasingInBudgetAndBelowEnvelope) {
  double last = 0.0;
  for (std::uint64_t budget : {1u, 5u, 20u, 80u}) {
    const auto rep = grothendieck_search(5, 4, budget, 77);
    EXPECT_GE(rep.ratio, last);
    EXPECT_LE(rep.ratio, kGrothendieckUpper + kNumEps);
    last = rep.ratio;
  }
}

TEST(GrothendieckProperty, RandomFamiliesStayBelowEnvelope) {
  Gen gen(4);
  for (int t = 0; t < 500; ++t) {
    const Family fam = Family::from_rows(gen.rows(gen.size(1, 10), gen.size(1, 8)));
    if (fam.all_zero()) continue;
    EXPECT_FALSE(grothendieck_ratio(fam).critical_finding);
  }
}

TEST(SandwichTest, EqualityCases) {
  const FinSeq ones(std::vector<double>(9, 1.0));
  EXPECT_NEAR(sandwich_slack(ones, E(1), E(2)).upper, 0.0, 1e-15);
  const FinSeq spike = FinSeq::unit(7, 3);
  EXPECT_NEAR(sandwich_slack(spike, E(1.5), E(4)).lower, 0.0, 1e-15);
}

TEST(SandwichTest, SweepHasNoViolations) {
  const std::vector<std::size_t> dims{1, 2, 5, 17, 64};
  const std::vector<std::pair<Exponent, Exponent>> pairs{{E(1), E(2)}, {E(1.5), E(3)}, {E(2), E(2)}, {E(2), E(9)}};
  const auto rep = sandwich_sweep(dims, pairs, 400, 3);
  EXPECT_EQ(rep.total_violations, 0u);
  ASSERT_EQ(rep.pairs.size(), 4u);
  EXPECT_EQ(rep.pairs[0].trials, 400u * dims.size());
  // dim 1 vectors make both sides tight
  EXPECT_NEAR(rep.pairs[0].min_lower_slack, 0.0, 1e-12);
  EXPECT_NEAR(rep.pairs[0].min_upper_slack, 0.0, 1e-12);
  const std::vector<std::pair<Exponent, Exponent>> bad{{E(3), E(2)}};
  EXPECT_THROW(sandwich_sweep(dims, bad, 1, 1), DomainError);
}

}  // namespace
}  // namespace uncond
