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

#include "mobcache/optimize.h"

#include <random>
#include <vector>

#include "gtest/gtest.h"
#include "mobcache/errors.h"
#include "mobcache/load.h"
#include "test_util.h"

namespace mobcache {
namespace {

double Load(const std::vector<int>& counts,
            const NeighborCacheDistribution& dist, const SystemConfig& cfg) {
  return AverageLoadFast(Placement(counts, cfg), dist, cfg).total;
}

// All feasible count vectors, by recursion.
void AllPlacements(int content, int left, const SystemConfig& cfg,
                   std::vector<int>& counts,
                   std::vector<std::vector<int>>& out) {
  if (content == cfg.content_count()) {
    out.push_back(counts);
    return;
  }
  for (int c = 0; c <= std::min(left, cfg.packets_per_content()); ++c) {
    counts[content] = c;
    AllPlacements(content + 1, left - c, cfg, counts, out);
  }
  counts[content] = 0;
}

TEST(PacketSetTest, RoundTrips) {
  const SystemConfig cfg;
  const Placement placement({2, 0, 3, 0, 0}, cfg);
  const PacketSet set = PacketSet::FromPlacement(placement, 5);
  EXPECT_EQ(set.size(), 5);
  EXPECT_EQ(set.ground_size(), 25);
  EXPECT_EQ(set.Elements(), (std::vector<int>{0, 1, 10, 11, 12}));
  EXPECT_EQ(set.ToPlacement(5), placement);
  const PacketSet again = PacketSet::FromElements(5, 5, set.Elements());
  EXPECT_EQ(again.ToPlacement(5), placement);
  EXPECT_TRUE(set.IsIndependent(5));
  EXPECT_FALSE(set.IsIndependent(4));
  const PacketSet masked = PacketSet::FromMask(2, 2, 0b1011);
  EXPECT_EQ(masked.counts()[0], 2);
  EXPECT_EQ(masked.counts()[1], 1);
  EXPECT_THROW(PacketSet::FromElements(2, 2, std::vector<int>{4}),
               std::domain_error);
}

TEST(GreedyTest, ReferenceSetupCachesTheMostPopularContent) {
  for (Scheme scheme : {Scheme::kOrthogonal, Scheme::kNonOrthogonal}) {
    const SystemConfig cfg = testing::Config(20.0, 1.0, 1.0, scheme);
    const auto dist = NeighborCacheDistribution::Uniform(cfg);
    const GreedyResult result = GreedyPlacement(dist, cfg);
    EXPECT_EQ(result.placement, Placement({5, 0, 0, 0, 0}, cfg));
    ASSERT_EQ(result.trace.size(), 5u);
    for (std::size_t k = 1; k < result.trace.size(); ++k) {
      EXPECT_LE(result.trace[k].gain, result.trace[k - 1].gain + 1e-15);
    }
  }
}

TEST(GreedyTest, StopsWhenMemoryIsFullOrGainsVanish) {
  ModelParams p;
  p.memory_packets = 0;
  const SystemConfig empty(p);
  EXPECT_EQ(GreedyPlacement(NeighborCacheDistribution::Uniform(empty), empty)
                .placement.total(),
            0);
  p.memory_packets = 25;
  const SystemConfig full(p);
  EXPECT_EQ(GreedyPlacement(NeighborCacheDistribution::Uniform(full), full)
                .placement.total(),
            25);
}

TEST(GreedyTest, MatchesExhaustiveOnRandomInstances) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    ModelParams p;
    p.content_count = 2 + trial % 3;
    p.packets_per_content = 2 + trial % 4;
    p.memory_packets = trial % (p.content_count * p.packets_per_content + 1);
    p.zipf_exponent = 0.2 * (trial % 7);
    p.snr = DbToLinear(5.0 * (trial % 9));
    p.departure_rate = 0.2 + 0.3 * (trial % 5);
    p.scheme = trial % 2 ? Scheme::kNonOrthogonal : Scheme::kOrthogonal;
    p.quadrature_nodes = 32;
    const SystemConfig cfg(p);
    std::vector<std::vector<double>> pmfs;
    for (int i = 0; i < p.content_count; ++i) {
      pmfs.push_back(testing::RandomPmf(p.packets_per_content, rng));
    }
    const NeighborCacheDistribution dist(pmfs, p.packets_per_content);
    const Placement greedy = GreedyPlacement(dist, cfg).placement;
    const Placement best = ExhaustivePlacement(dist, cfg);
    const double greedy_load = Load({greedy.counts().begin(), greedy.counts().end()}, dist, cfg);
    const double best_load = Load({best.counts().begin(), best.counts().end()}, dist, cfg);
    EXPECT_NEAR(greedy_load, best_load, 1e-12) << "trial " << trial;

    // Exhaustive really is the minimum over every feasible placement.
    std::vector<std::vector<int>> all;
    std::vector<int> scratch(p.content_count, 0);
    AllPlacements(0, p.memory_packets, cfg, scratch, all);
    EXPECT_EQ(static_cast<std::int64_t>(all.size()),
              CountFeasiblePlacements(p.content_count, p.packets_per_content,
                                      p.memory_packets));
    for (const auto& counts : all) {
      EXPECT_LE(best_load, Load(counts, dist, cfg) + 1e-12);
    }
  }
}

TEST(ExhaustiveTest, ReferenceOrdering) {
  const SystemConfig cfg;
  const auto dist = NeighborCacheDistribution::Uniform(cfg);
  const Placement best = ExhaustivePlacement(dist, cfg);
  const Placement greedy = GreedyPlacement(dist, cfg).placement;
  const double best_load = AverageLoadFast(best, dist, cfg).total;
  const double greedy_load = AverageLoadFast(greedy, dist, cfg).total;
  EXPECT_LE(best_load, greedy_load + 1e-12);
  std::mt19937_64 rng(5);
  std::vector<std::vector<int>> all;
  std::vector<int> scratch(5, 0);
  AllPlacements(0, 5, cfg, scratch, all);
  for (int k = 0; k < 100; ++k) {
    const auto& counts = all[rng() % all.size()];
    EXPECT_LE(greedy_load, Load(counts, dist, cfg) + 1e-12);
  }
}

TEST(ExhaustiveTest, TiesGoToTheLexicographicallyGreatest) {
  // Equal popularity and no neighbors: every full placement ties.
  ModelParams p;
  p.zipf_exponent = 0.0;
  p.arrival_rate = 0.0;
  const SystemConfig cfg(p);
  const auto dist = NeighborCacheDistribution::Uniform(cfg);
  EXPECT_EQ(ExhaustivePlacement(dist, cfg), Placement({5, 0, 0, 0, 0}, cfg));
  EXPECT_EQ(GreedyPlacement(dist, cfg).placement,
            Placement({5, 0, 0, 0, 0}, cfg));
}

TEST(ExhaustiveTest, RefusesHugeSearchSpaces) {
  ModelParams p;
  p.content_count = 40;
  p.packets_per_content = 5;
  p.memory_packets = 20;
  const SystemConfig cfg(p);
  EXPECT_GT(CountFeasiblePlacements(40, 5, 20), kExhaustiveCap);
  EXPECT_THROW(ExhaustivePlacement(NeighborCacheDistribution::Uniform(cfg), cfg),
               CapacityError);
}

TEST(CountFeasiblePlacementsTest, SmallCases) {
  EXPECT_EQ(CountFeasiblePlacements(1, 5, 5), 6);
  EXPECT_EQ(CountFeasiblePlacements(2, 1, 1), 3);
  EXPECT_EQ(CountFeasiblePlacements(5, 5, 5), 252);  // C(10, 5)
}

TEST(MatroidTest, PartitionStructureIsAMatroid) {
  for (int f = 1; f <= 3; ++f) {
    for (int l = 1; l <= 3; ++l) {
      for (int m = 0; m <= f * l; ++m) {
        const MatroidReport report = CheckMatroidAxioms(f, l, m);
        EXPECT_TRUE(report.passed) << report.counterexample;
      }
    }
  }
  // 2 contents of 2 packets, M = 3: sets of size <= 3, i.e. 1+4+6+4.
  EXPECT_EQ(CheckMatroidAxioms(2, 2, 3).independent_sets, 15u);
  EXPECT_THROW(CheckMatroidAxioms(4, 4, 4), CapacityError);
}

TEST(SubmodularityTest, NoViolationsOnReferenceSetup) {
  for (Scheme scheme : {Scheme::kOrthogonal, Scheme::kNonOrthogonal}) {
    for (double snr_db : {0.0, 20.0, 40.0}) {
      const SystemConfig cfg = testing::Config(snr_db, 1.0, 1.0, scheme);
      const SubmodularityReport report = CheckSubmodularity(
          NeighborCacheDistribution::Uniform(cfg), cfg, 2000, 17);
      EXPECT_TRUE(report.passed()) << report.counterexample;
      EXPECT_EQ(report.samples, 2000);
      EXPECT_LE(report.max_excess, 1e-9);
    }
  }
}

TEST(SubmodularityTest, RandomCachePmfs) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 10; ++trial) {
    const SystemConfig cfg = testing::Config(5.0 * trial, 1.0, 0.3 + 0.2 * trial);
    std::vector<std::vector<double>> pmfs;
    for (int i = 0; i < 5; ++i) pmfs.push_back(testing::RandomPmf(5, rng));
    const SubmodularityReport report = CheckSubmodularity(
        NeighborCacheDistribution(pmfs, 5), cfg, 500, trial);
    EXPECT_TRUE(report.passed()) << report.counterexample;
  }
}

}  // namespace
}  // namespace mobcache
