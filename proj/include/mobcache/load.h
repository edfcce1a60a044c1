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

// Base-station load of the typical user. For a request of content i the BS
// sends (L - c_i - sum_k min(d_k, B(u)))^+ packets, where d_k are the packet
// counts cached by the neighbors and u is how many of them hold at least one
// packet of i. Averaging over requests, the Poisson neighbor count and the
// neighbor caches gives the average load, evaluated here two ways:
//
//   * AverageLoadEnum enumerates every neighbor cache vector for every
//     neighbor count up to the truncation point (verification only).
//   * AverageLoadFast uses that u is itself Poisson with mean
//     (1 - q_i(0)) eta lambda / mu, and convolves the capped per-transmitter
//     deliveries with the support saturated at L.

#ifndef MOBCACHE_LOAD_H_
#define MOBCACHE_LOAD_H_

#include <algorithm>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mobcache/channel.h"
#include "mobcache/errors.h"
#include "mobcache/model.h"

namespace mobcache {

enum class LoadMethod { kEnumExact, kConvolution, kMonteCarlo };

inline std::string_view LoadMethodName(LoadMethod method) {
  switch (method) {
    case LoadMethod::kEnumExact:
      return "enum_exact";
    case LoadMethod::kConvolution:
      return "convolution";
    case LoadMethod::kMonteCarlo:
      return "monte_carlo";
  }
  return "unknown";
}

struct LoadEvaluation {
  double total = 0.0;               // packets
  std::vector<double> per_content;  // f_i-weighted, sums to total
  double truncation_bound = 0.0;    // absolute error from the Poisson tail
  LoadMethod method = LoadMethod::kConvolution;
};

// Largest neighbor count the enumeration oracle accepts: (L+1)^5 vectors.
inline constexpr int kEnumMaxNeighbors = 5;

// Packets the BS must send for one request of a content with `cached`
// packets in the typical user's memory, given the neighbors' packet counts
// of that content. Neighbors caching nothing neither deliver nor count
// toward u.
inline int RequestLoad(int cached, std::span<const int> neighbor_packets,
                       const SystemConfig& cfg, const LinkBudget& lb) {
  const int packets = cfg.packets_per_content();
  if (cached < 0 || cached > packets) {
    throw std::domain_error("request_load: cached count outside [0, L]");
  }
  if (lb.scheme() != cfg.scheme()) {
    throw std::domain_error("request_load: link budget built for other scheme");
  }
  int u = 0;
  for (int d : neighbor_packets) {
    if (d < 0 || d > packets) {
      throw std::domain_error("request_load: neighbor count outside [0, L]");
    }
    if (d > 0) ++u;
  }
  if (u == 0) return packets - cached;
  const int budget = u <= lb.u_max() ? lb.budget(u) : PacketBudget(u, cfg);
  long long delivered = 0;
  for (int d : neighbor_packets) {
    if (d > 0) delivered += std::min(d, budget);
  }
  return static_cast<int>(
      std::max<long long>(0, packets - cached - delivered));
}

// PMF over {0..L} of the packets delivered by u transmitters of one content,
// each sending min(d, budget) with d drawn from q conditioned on d > 0.
// Mass at L stands for "L or more".
inline std::vector<double> DeliveredPacketPmf(std::span<const double> q,
                                              int u, int budget) {
  const int packets = static_cast<int>(q.size()) - 1;
  std::vector<double> sum(packets + 1, 0.0);
  sum[0] = 1.0;
  if (u <= 0) return sum;
  double active = 0.0;
  for (int d = 1; d <= packets; ++d) active += q[d];
  if (!(active > 0.0)) {
    throw std::domain_error("delivered pmf: no neighbor caches this content");
  }
  std::vector<double> single(packets + 1, 0.0);
  for (int d = 1; d <= packets; ++d) {
    single[std::min({d, budget, packets})] += q[d] / active;
  }
  std::vector<double> next(packets + 1);
  for (int k = 0; k < u; ++k) {
    std::fill(next.begin(), next.end(), 0.0);
    for (int s = 0; s <= packets; ++s) {
      if (sum[s] == 0.0) continue;
      for (int t = 0; t <= packets; ++t) {
        next[std::min(s + t, packets)] += sum[s] * single[t];
      }
    }
    sum.swap(next);
  }
  return sum;
}

// Expected BS shortfall of one content, E[(L - c - S)^+], for every cache
// count c in 0..L. `tail_mass` is the Poisson mass of u beyond the
// truncation point, which the table omits.
struct ShortfallTable {
  std::vector<double> by_count;
  double tail_mass = 0.0;
};

inline ShortfallTable ContentShortfall(std::span<const double> q,
                                       double capable_mean, int truncation,
                                       const LinkBudget& lb) {
  const int packets = static_cast<int>(q.size()) - 1;
  double active = 0.0;
  for (int d = 1; d <= packets; ++d) active += q[d];
  const double mean = active * capable_mean;

  ShortfallTable table;
  table.by_count.assign(packets + 1, 0.0);
  const double idle = PoissonPmf(mean, 0);
  for (int c = 0; c <= packets; ++c) table.by_count[c] = idle * (packets - c);
  if (active > 0.0 && mean > 0.0) {
    for (int u = 1; u <= truncation; ++u) {
      const double weight = PoissonPmf(mean, u);
      if (weight == 0.0) continue;
      const std::vector<double> delivered =
          DeliveredPacketPmf(q, u, lb.budget(u));
      for (int c = 0; c <= packets; ++c) {
        double expected = 0.0;
        for (int s = 0; s < packets - c; ++s) {
          expected += delivered[s] * (packets - c - s);
        }
        table.by_count[c] += weight * expected;
      }
    }
  }
  table.tail_mass = PoissonTail(mean, truncation);
  return table;
}

// One table per content under the configuration's truncation point.
inline std::vector<ShortfallTable> ShortfallTables(
    const NeighborCacheDistribution& dist, const SystemConfig& cfg,
    const LinkBudget& lb) {
  dist.CheckCompatible(cfg);
  const int truncation = PoissonTruncation(cfg);
  if (truncation > lb.u_max()) {
    throw std::domain_error("link budget does not cover the truncation point");
  }
  std::vector<ShortfallTable> tables;
  tables.reserve(dist.content_count());
  for (std::size_t i = 0; i < dist.content_count(); ++i) {
    tables.push_back(ContentShortfall(dist.content(i), cfg.capable_user_mean(),
                                      truncation, lb));
  }
  return tables;
}

// Combines per-content tables; summation runs in content order.
inline LoadEvaluation LoadFromTables(std::span<const int> counts,
                                     const ContentPopularity& popularity,
                                     std::span<const ShortfallTable> tables,
                                     int packets_per_content) {
  LoadEvaluation eval;
  eval.method = LoadMethod::kConvolution;
  eval.per_content.resize(counts.size());
  for (std::size_t i = 0; i < counts.size(); ++i) {
    eval.per_content[i] = popularity[i] * tables[i].by_count[counts[i]];
    eval.total += eval.per_content[i];
    eval.truncation_bound +=
        popularity[i] * packets_per_content * tables[i].tail_mass;
  }
  return eval;
}

inline LoadEvaluation AverageLoadFast(const Placement& placement,
                                      const NeighborCacheDistribution& dist,
                                      const SystemConfig& cfg,
                                      const LinkBudget& lb) {
  if (static_cast<int>(placement.size()) != cfg.content_count()) {
    throw std::domain_error("average_load: placement needs F entries");
  }
  const auto tables = ShortfallTables(dist, cfg, lb);
  return LoadFromTables(placement.counts(), ZipfPopularity(cfg), tables,
                        cfg.packets_per_content());
}

inline LoadEvaluation AverageLoadFast(const Placement& placement,
                                      const NeighborCacheDistribution& dist,
                                      const SystemConfig& cfg) {
  return AverageLoadFast(placement, dist, cfg, BuildLinkBudget(cfg));
}

// Exact expectation by enumerating all (L+1)^n neighbor cache vectors for
// each n up to the truncation point.
inline LoadEvaluation AverageLoadEnum(const Placement& placement,
                                      const NeighborCacheDistribution& dist,
                                      const SystemConfig& cfg,
                                      int max_neighbors = kEnumMaxNeighbors) {
  dist.CheckCompatible(cfg);
  if (static_cast<int>(placement.size()) != cfg.content_count()) {
    throw std::domain_error("average_load: placement needs F entries");
  }
  const int truncation = PoissonTruncation(cfg);
  if (truncation > max_neighbors) {
    throw CapacityError("average_load_enum: truncation point " +
                        std::to_string(truncation) + " exceeds the cap of " +
                        std::to_string(max_neighbors) +
                        " neighbors; use average_load_fast");
  }
  const int packets = cfg.packets_per_content();
  const LinkBudget lb = BuildLinkBudget(cfg, std::max(1, truncation));
  const ContentPopularity popularity = ZipfPopularity(cfg);

  LoadEvaluation eval;
  eval.method = LoadMethod::kEnumExact;
  eval.per_content.resize(placement.size());
  for (std::size_t i = 0; i < placement.size(); ++i) {
    const std::span<const double> q = dist.content(i);
    double expected = 0.0;
    for (int n = 0; n <= truncation; ++n) {
      std::vector<int> d(n, 0);
      double given_n = 0.0;
      while (true) {
        double prob = 1.0;
        for (int v : d) prob *= q[v];
        if (prob > 0.0) {
          given_n += prob * RequestLoad(placement[i], d, cfg, lb);
        }
        // Odometer over {0..L}^n.
        int k = 0;
        while (k < n && d[k] == packets) d[k++] = 0;
        if (k == n) break;
        ++d[k];
      }
      expected += CapableUserPmf(cfg, n) * given_n;
    }
    eval.per_content[i] = popularity[i] * expected;
    eval.total += eval.per_content[i];
  }
  eval.truncation_bound =
      packets * PoissonTail(cfg.capable_user_mean(), truncation);
  return eval;
}

// Expected drop of the average load when one more packet of `content` is
// cached: f_i (E_i(c_i) - E_i(c_i + 1)).
inline double MarginalGain(const Placement& placement, std::size_t content,
                           const NeighborCacheDistribution& dist,
                           const SystemConfig& cfg) {
  dist.CheckCompatible(cfg);
  if (content >= placement.size()) {
    throw std::domain_error("marginal_gain: content index out of range");
  }
  const int cached = placement[content];
  if (cached >= cfg.packets_per_content()) {
    throw std::domain_error("marginal_gain: content already fully cached");
  }
  const int truncation = PoissonTruncation(cfg);
  const LinkBudget lb = BuildLinkBudget(cfg, std::max(1, truncation));
  const ShortfallTable table = ContentShortfall(
      dist.content(content), cfg.capable_user_mean(), truncation, lb);
  return ZipfPopularity(cfg)[content] *
         (table.by_count[cached] - table.by_count[cached + 1]);
}

}  // namespace mobcache

#endif  // MOBCACHE_LOAD_H_
