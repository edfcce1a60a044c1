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

// End-to-end sampling of the system model: the capable-neighbor count, the
// neighbors' caches and positions. Packet delivery uses the same mean-field
// budget B(u) as the analytical evaluators, so the estimate targets exactly
// the average load they compute.

#ifndef MOBCACHE_MONTECARLO_H_
#define MOBCACHE_MONTECARLO_H_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <vector>

#include "mobcache/channel.h"
#include "mobcache/load.h"
#include "mobcache/model.h"
#include "mobcache/random.h"

namespace mobcache {

struct SampledState {
  int n = 0;                                // capable neighbors
  std::vector<std::vector<int>> packets;    // n x F cached packet counts
  std::vector<double> radii;                // distance to the typical user
};

namespace montecarlo_internal {

// Inverse-CDF draw from a PMF over {0..L}.
inline int DrawFromCdf(std::span<const double> cdf, double uniform) {
  const auto it = std::upper_bound(cdf.begin(), cdf.end(), uniform);
  const auto index = static_cast<int>(it - cdf.begin());
  return std::min(index, static_cast<int>(cdf.size()) - 1);
}

inline std::vector<std::vector<double>> CumulativePmfs(
    const NeighborCacheDistribution& dist) {
  std::vector<std::vector<double>> cdfs(dist.content_count());
  for (std::size_t i = 0; i < cdfs.size(); ++i) {
    const auto q = dist.content(i);
    cdfs[i].resize(q.size());
    double acc = 0.0;
    for (std::size_t d = 0; d < q.size(); ++d) {
      acc += q[d];
      cdfs[i][d] = acc;
    }
  }
  return cdfs;
}

template <typename Engine>
SampledState SampleState(std::span<const std::vector<double>> cdfs,
                         const SystemConfig& cfg, Engine& rng) {
  SampledState state;
  const double mean = cfg.capable_user_mean();
  if (mean > 0.0) {
    std::poisson_distribution<int> count(mean);
    state.n = count(rng);
  }
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  state.packets.assign(state.n, std::vector<int>(cfg.content_count()));
  state.radii.resize(state.n);
  for (int k = 0; k < state.n; ++k) {
    for (int i = 0; i < cfg.content_count(); ++i) {
      state.packets[k][i] = DrawFromCdf(cdfs[i], uniform(rng));
    }
    state.radii[k] = cfg.radius() * std::sqrt(uniform(rng));
  }
  return state;
}

}  // namespace montecarlo_internal

// n ~ Poisson(eta lambda / mu); each cached count drawn independently from
// its content's PMF; radii R sqrt(U), uniform in the disc.
template <typename Engine>
SampledState SampleState(const NeighborCacheDistribution& dist,
                         const SystemConfig& cfg, Engine& rng) {
  dist.CheckCompatible(cfg);
  const auto cdfs = montecarlo_internal::CumulativePmfs(dist);
  return montecarlo_internal::SampleState(std::span(cdfs), cfg, rng);
}

enum class Stratification {
  kByPopularity,  // every trial scores all contents weighted by f_i
  kNone,          // every trial draws the requested content from f
};

// Monte Carlo estimate of the average load. Trial t draws from its own
// stream TrialStream(seed, t), so results do not depend on evaluation order.
inline McEstimate EstimateAverageLoad(
    const Placement& placement, const NeighborCacheDistribution& dist,
    const SystemConfig& cfg, std::int64_t trials, std::uint64_t seed,
    Stratification strata = Stratification::kByPopularity) {
  if (trials < 1) throw std::domain_error("estimate: trials must be >= 1");
  dist.CheckCompatible(cfg);
  if (static_cast<int>(placement.size()) != cfg.content_count()) {
    throw std::domain_error("estimate: placement needs F entries");
  }
  const LinkBudget lb = BuildLinkBudget(cfg);
  const ContentPopularity popularity = ZipfPopularity(cfg);
  const auto cdfs = montecarlo_internal::CumulativePmfs(dist);
  std::vector<double> request_cdf(popularity.size());
  {
    double acc = 0.0;
    for (std::size_t i = 0; i < popularity.size(); ++i) {
      acc += popularity[i];
      request_cdf[i] = acc;
    }
  }

  std::vector<double> samples(static_cast<std::size_t>(trials));
  std::vector<int> column;
  for (std::int64_t t = 0; t < trials; ++t) {
    SplitMix64 rng = TrialStream(seed, static_cast<std::uint64_t>(t));
    const SampledState state =
        montecarlo_internal::SampleState(std::span(cdfs), cfg, rng);
    auto load_of = [&](std::size_t i) {
      column.resize(state.n);
      for (int k = 0; k < state.n; ++k) column[k] = state.packets[k][i];
      return static_cast<double>(RequestLoad(placement[i], column, cfg, lb));
    };
    double value = 0.0;
    if (strata == Stratification::kByPopularity) {
      for (std::size_t i = 0; i < popularity.size(); ++i) {
        value += popularity[i] * load_of(i);
      }
    } else {
      const int requested =
          montecarlo_internal::DrawFromCdf(request_cdf, rng.Uniform());
      value = load_of(static_cast<std::size_t>(requested));
    }
    samples[static_cast<std::size_t>(t)] = value;
  }
  return Summarize(samples);
}

}  // namespace mobcache

#endif  // MOBCACHE_MONTECARLO_H_
