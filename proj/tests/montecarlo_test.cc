// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mobcache/montecarlo.h"

#include <cmath>
#include <vector>

#include "gtest/gtest.h"
#include "mobcache/load.h"
#include "mobcache/random.h"
#include "test_util.h"

namespace mobcache {
namespace {

TEST(RandomTest, TrialStreamsAreIndependentOfOrder) {
  SplitMix64 a = TrialStream(42, 7);
  SplitMix64 b = TrialStream(42, 7);
  SplitMix64 c = TrialStream(42, 8);
  const auto x = a();
  EXPECT_EQ(x, b());
  EXPECT_NE(x, c());
  for (int k = 0; k < 1000; ++k) {
    const double u = a.Uniform();
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
  }
}

TEST(RandomTest, SummarizeMeanAndStandardError) {
  const std::vector<double> xs = {1.0, 2.0, 3.0, 4.0};
  const McEstimate e = Summarize(xs);
  EXPECT_DOUBLE_EQ(e.estimate, 2.5);
  EXPECT_NEAR(e.standard_error, std::sqrt((5.0 / 3.0) / 4.0), 1e-15);
  EXPECT_EQ(e.trials, 4);
  const std::vector<double> same(10, 0.5);
  EXPECT_EQ(Summarize(same).standard_error, 0.0);
}

TEST(RandomTest, ZScoreHandlesZeroVariance) {
  McEstimate e;
  e.estimate = 2.0;
  e.standard_error = 0.5;
  EXPECT_DOUBLE_EQ(ZScore(e, 1.0), 2.0);
  e.standard_error = 0.0;
  EXPECT_EQ(ZScore(e, 2.0 + 1e-15), 0.0);
  EXPECT_TRUE(std::isinf(ZScore(e, 2.1)));
}

TEST(RandomTest, PairwiseSumIsAccurate) {
  std::vector<double> xs(1 << 20, 0.1);
  EXPECT_NEAR(PairwiseSum(xs), 0.1 * (1 << 20), 1e-8);
}

TEST(SampleStateTest, NoArrivalsMeansNoNeighbors) {
  const SystemConfig cfg = testing::Config(20.0, 0.0, 1.0);
  const auto dist = NeighborCacheDistribution::Uniform(cfg);
  for (std::uint64_t t = 0; t < 100; ++t) {
    SplitMix64 rng = TrialStream(1, t);
    EXPECT_EQ(SampleState(dist, cfg, rng).n, 0);
  }
}

TEST(SampleStateTest, MomentsMatchTheModel) {
  const SystemConfig cfg;  // mean 0.5
  std::vector<std::vector<double>> pmfs(5, std::vector<double>(6, 0.1));
  for (auto& pmf : pmfs) pmf[0] = 0.5;
  const NeighborCacheDistribution dist(pmfs, 5);
  const int draws = 100'000;
  double n_sum = 0.0;
  double zero = 0.0;
  double entries = 0.0;
  double radius_sq = 0.0;
  for (int t = 0; t < draws; ++t) {
    SplitMix64 rng = TrialStream(9, t);
    const SampledState s = SampleState(dist, cfg, rng);
    n_sum += s.n;
    for (int k = 0; k < s.n; ++k) {
      for (int d : s.packets[k]) {
        ASSERT_GE(d, 0);
        ASSERT_LE(d, 5);
        zero += d == 0;
        entries += 1;
      }
      ASSERT_GE(s.radii[k], 0.0);
      ASSERT_LE(s.radii[k], 5.0);
      radius_sq += s.radii[k] * s.radii[k];
    }
  }
  // Poisson mean, sd sqrt(0.5 / draws).
  EXPECT_NEAR(n_sum / draws, 0.5, 3.0 * std::sqrt(0.5 / draws));
  // Binomial proportion of empty caches.
  EXPECT_NEAR(zero / entries, 0.5, 3.0 * std::sqrt(0.25 / entries));
  // Uniform in the disc: E[r^2] = R^2 / 2, Var[r^2] = R^4 / 12.
  const double users = n_sum;
  EXPECT_NEAR(radius_sq / users, 12.5, 3.0 * std::sqrt(625.0 / 12.0 / users));
}

TEST(EstimateAverageLoadTest, NoArrivalsIsExact) {
  const SystemConfig cfg = testing::Config(20.0, 0.0, 1.0);
  const auto dist = NeighborCacheDistribution::Uniform(cfg);
  const Placement placement({2, 2, 1, 0, 0}, cfg);
  const McEstimate e = EstimateAverageLoad(placement, dist, cfg, 1000, 3);
  const ContentPopularity f = ZipfPopularity(cfg);
  double expected = 0.0;
  for (std::size_t i = 0; i < 5; ++i) expected += f[i] * (5 - placement[i]);
  EXPECT_NEAR(e.estimate, expected, 1e-14);
  EXPECT_EQ(e.standard_error, 0.0);
}

TEST(EstimateAverageLoadTest, AgreesWithFastPath) {
  for (Scheme scheme : {Scheme::kOrthogonal, Scheme::kNonOrthogonal}) {
    const SystemConfig cfg = testing::Config(40.0, 1.0, 1.0, scheme);
    const auto dist = NeighborCacheDistribution::Uniform(cfg);
    const Placement placement({2, 2, 1, 0, 0}, cfg);
    const McEstimate e = EstimateAverageLoad(placement, dist, cfg, 50'000, 12);
    EXPECT_NEAR(e.estimate, AverageLoadFast(placement, dist, cfg).total,
                4.0 * e.standard_error);
  }
}

TEST(EstimateAverageLoadTest, UnstratifiedAgreesWithStratified) {
  const SystemConfig cfg = testing::Config(30.0);
  const auto dist = NeighborCacheDistribution::Uniform(cfg);
  const Placement placement({3, 1, 1, 0, 0}, cfg);
  const McEstimate a = EstimateAverageLoad(placement, dist, cfg, 50'000, 4,
                                           Stratification::kByPopularity);
  const McEstimate b = EstimateAverageLoad(placement, dist, cfg, 50'000, 5,
                                           Stratification::kNone);
  EXPECT_LT(a.standard_error, b.standard_error);
  EXPECT_NEAR(a.estimate, b.estimate,
              4.0 * std::hypot(a.standard_error, b.standard_error));
}

TEST(EstimateAverageLoadTest, DeterministicPerSeed) {
  const SystemConfig cfg;
  const auto dist = NeighborCacheDistribution::Uniform(cfg);
  const Placement placement({5, 0, 0, 0, 0}, cfg);
  const McEstimate a = EstimateAverageLoad(placement, dist, cfg, 2000, 77);
  const McEstimate b = EstimateAverageLoad(placement, dist, cfg, 2000, 77);
  EXPECT_EQ(a.estimate, b.estimate);
  EXPECT_EQ(a.standard_error, b.standard_error);
  EXPECT_THROW(EstimateAverageLoad(placement, dist, cfg, 0, 77),
               std::domain_error);
}

}  // namespace
}  // namespace mobcache
