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

// High-mobility regime. When neighbors stay briefly, every transmitter is
// limited by its packet budget rather than by what it caches, and moving the
// positive part outside the expectation gives a lower bound on the load
// whose error is at most T |c|. Relaxing the integer constraint, the optimum
// of that bound caches L - delta packets of the most popular contents,
// where delta is the expected number of packets delivered over D2D
// (nu for orthogonal access, zeta for non-orthogonal access).

#ifndef MOBCACHE_HIGH_MOBILITY_H_
#define MOBCACHE_HIGH_MOBILITY_H_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "mobcache/channel.h"
#include "mobcache/load.h"
#include "mobcache/model.h"

namespace mobcache {

struct BoundedValue {
  double value = 0.0;
  double truncation_bound = 0.0;
};

namespace high_mobility_internal {

// Mean of the thinned Poisson count of neighbors holding content q.
inline double TransmitterMean(std::span<const double> q,
                              const SystemConfig& cfg) {
  double active = 0.0;
  for (std::size_t d = 1; d < q.size(); ++d) active += q[d];
  return active * cfg.capable_user_mean();
}

inline void CheckPmf(std::span<const double> q, const SystemConfig& cfg) {
  if (static_cast<int>(q.size()) != cfg.packets_per_content() + 1) {
    throw std::domain_error("cache pmf needs L+1 entries");
  }
}

}  // namespace high_mobility_internal

// nu = E[u floor(L P[.|1] log(1+tau) / (u mu))] with u the number of
// neighbors holding the content.
inline BoundedValue ExpectedOrthogonalDelivery(std::span<const double> q,
                                               const SystemConfig& cfg) {
  high_mobility_internal::CheckPmf(q, cfg);
  const double mean = high_mobility_internal::TransmitterMean(q, cfg);
  const int truncation = PoissonTruncation(cfg);
  const double p_first = SuccessProbability(1, cfg);
  const double bits = std::log1p(cfg.sinr_threshold());
  BoundedValue out;
  for (int u = 1; u <= truncation; ++u) {
    const int budget = channel_internal::BudgetFromRate(p_first * bits / u, cfg);
    out.value += PoissonPmf(mean, u) * u * budget;
  }
  // u * floor(x / u) <= floor(x) = B(1).
  const int first_budget = channel_internal::BudgetFromRate(p_first * bits, cfg);
  out.truncation_bound = first_budget * PoissonTail(mean, truncation);
  return out;
}

// zeta = (L / mu) log(1+tau) E[u P[rho > tau | u]], no floor.
inline BoundedValue ExpectedNonOrthogonalDelivery(std::span<const double> q,
                                                  const SystemConfig& cfg) {
  high_mobility_internal::CheckPmf(q, cfg);
  const double mean = high_mobility_internal::TransmitterMean(q, cfg);
  const int truncation = PoissonTruncation(cfg);
  const SuccessIntegrator success(cfg);
  const double scale = cfg.packets_per_content() / cfg.departure_rate() *
                       std::log1p(cfg.sinr_threshold());
  BoundedValue out;
  double sum = 0.0;
  for (int u = 1; u <= truncation; ++u) {
    sum += PoissonPmf(mean, u) * u * success(u);
  }
  out.value = scale * sum;
  // sum_{u > N} u p(u) = mean P[X >= N] and P[.|u] <= 1.
  out.truncation_bound = scale * mean * PoissonTail(mean, truncation - 1);
  return out;
}

inline BoundedValue ExpectedDelivery(Scheme scheme, std::span<const double> q,
                                     const SystemConfig& cfg) {
  return scheme == Scheme::kOrthogonal ? ExpectedOrthogonalDelivery(q, cfg)
                                       : ExpectedNonOrthogonalDelivery(q, cfg);
}

struct GapConstant {
  double value = 0.0;  // <= 0
  bool degenerate = false;
};

// Lower-bound constants with g(u) >= T * c for every u.
//
// Orthogonal: c = -L P[.|1] log(1+tau).
// Non-orthogonal: c' = -L log(1+tau) int exp(-r^a tau / snr) A*(r) 2r/R^2 dr
// where A*(r) = max u beta(r)^(u-1). Over real u the maximizer is
// u* = -1/ln beta(r), which grows like r^-2 near r = 0 and makes the
// integral diverge, so u is restricted to the integers 1..U the evaluators
// actually sum over (U = Poisson truncation point).
inline GapConstant JensenGapConstant(Scheme scheme, const SystemConfig& cfg) {
  const double bits = std::log1p(cfg.sinr_threshold());
  const double packets = cfg.packets_per_content();
  const SuccessIntegrator success(cfg);
  GapConstant out;
  if (scheme == Scheme::kOrthogonal) {
    out.value = -packets * success(1) * bits;
    return out;
  }
  const int cap = std::max(1, PoissonTruncation(cfg));
  double integral = 0.0;
  for (std::size_t j = 0; j < success.betas().size(); ++j) {
    const double beta = success.betas()[j];
    double best = 1.0;  // u = 1
    if (beta >= 1.0) {
      out.degenerate = true;
      best = cap;
    } else if (beta > 0.0) {
      const double peak = -1.0 / std::log(beta);
      // Clamp in floating point; the peak overflows int as beta -> 1.
      const double top = cap;
      const int lo = static_cast<int>(std::clamp(std::floor(peak), 1.0, top));
      const int hi = static_cast<int>(std::clamp(std::ceil(peak), 1.0, top));
      for (int u : {1, lo, hi, cap}) {
        best = std::max(best,
                        u * channel_internal::InterferencePower(beta, u));
      }
    }
    integral += success.weights()[j] * best;
  }
  out.value = -packets * bits * integral;
  return out;
}

struct HighMobilityConstants {
  double orthogonal_delivery = 0.0;      // nu
  double non_orthogonal_delivery = 0.0;  // zeta
  double orthogonal_gap_constant = 0.0;      // c
  double non_orthogonal_gap_constant = 0.0;  // c'
  double stay_time = 0.0;                    // T
  bool degenerate = false;
};

inline HighMobilityConstants ComputeHighMobilityConstants(
    const NeighborCacheDistribution& dist, const SystemConfig& cfg,
    std::size_t content = 0) {
  dist.CheckCompatible(cfg);
  const auto q = dist.content(content);
  HighMobilityConstants out;
  out.orthogonal_delivery = ExpectedOrthogonalDelivery(q, cfg).value;
  out.non_orthogonal_delivery = ExpectedNonOrthogonalDelivery(q, cfg).value;
  out.orthogonal_gap_constant =
      JensenGapConstant(Scheme::kOrthogonal, cfg).value;
  const GapConstant noma = JensenGapConstant(Scheme::kNonOrthogonal, cfg);
  out.non_orthogonal_gap_constant = noma.value;
  out.degenerate = noma.degenerate;
  out.stay_time = ExpectedStayTime(cfg);
  return out;
}

// Continuous optimum of the relaxed problem with per-content cap
// t = L - delta: t for the k-1 most popular contents, the remainder
// M - (k-1) t on content k = ceil(M / t), nothing after. t <= 0 caches
// nothing; M >= F t caches t everywhere and leaves memory unused.
inline std::vector<double> ContinuousHighMobilityOptimum(double threshold,
                                                         int content_count,
                                                         double memory) {
  std::vector<double> c(content_count, 0.0);
  if (!(threshold > 0.0) || !(memory > 0.0)) return c;
  if (memory >= content_count * threshold) {
    std::fill(c.begin(), c.end(), threshold);
    return c;
  }
  const int k = static_cast<int>(std::ceil(memory / threshold));  // 1-based
  for (int i = 0; i < k - 1; ++i) c[i] = threshold;
  c[k - 1] = std::max(0.0, memory - (k - 1) * threshold);
  return c;
}

struct HighMobilityResult {
  Placement placement;
  std::vector<double> continuous;
  double threshold = 0.0;  // L - delta
  int split = 0;           // k, 1-based; 0 when nothing is cached
  bool heterogeneous = false;
};

// Integer placement minimizing the relaxed objective sum_i f_i (t - c_i)^+.
// The objective is separable and concave per content, so taking packets one
// at a time by relaxed gain f_i min(1, t - c_i) is exact. A packet never
// lands past t; the ceil(t)-th one is taken when its fractional gain beats
// the alternatives. Gains within 1e-9 of zero count as zero, so memory
// stays unused once every content reaches t.
inline Placement RoundHighMobilityOptimum(double threshold,
                                          const SystemConfig& cfg) {
  const ContentPopularity f = ZipfPopularity(cfg);
  const int packets = cfg.packets_per_content();
  std::vector<int> counts(f.size(), 0);
  auto gain = [&](std::size_t i) {
    if (counts[i] >= packets) return 0.0;
    const double room = threshold - counts[i];
    return room > 1e-9 ? f[i] * std::min(1.0, room) : 0.0;
  };
  for (int m = 0; m < cfg.memory_packets(); ++m) {
    std::size_t best = 0;
    double best_gain = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) {
      const double g = gain(i);
      if (g > best_gain) {
        best_gain = g;
        best = i;
      }
    }
    if (!(best_gain > 0.0)) break;
    ++counts[best];
  }
  return Placement(std::move(counts), cfg);
}

// Closed-form high-mobility placement. delta is taken from the most popular
// content; `heterogeneous` flags distributions where contents differ and
// the single-threshold formula is only an approximation.
inline HighMobilityResult HighMobilityPlacement(
    Scheme scheme, const NeighborCacheDistribution& dist,
    const SystemConfig& cfg) {
  dist.CheckCompatible(cfg);
  const double delta = ExpectedDelivery(scheme, dist.content(0), cfg).value;
  const double threshold = cfg.packets_per_content() - delta;
  std::vector<double> continuous = ContinuousHighMobilityOptimum(
      threshold, cfg.content_count(), cfg.memory_packets());
  int split = 0;
  for (std::size_t i = 0; i < continuous.size(); ++i) {
    if (continuous[i] > 0.0) split = static_cast<int>(i) + 1;
  }
  Placement placement = RoundHighMobilityOptimum(threshold, cfg);
  return {std::move(placement), std::move(continuous), threshold, split,
          !dist.homogeneous()};
}

// sum_i f_i (L - c_i - delta_i)^+ for real-valued c.
inline double RelaxedObjective(std::span<const double> c,
                               std::span<const double> popularity,
                               std::span<const double> delivered,
                               int packets_per_content, double memory) {
  if (c.size() != popularity.size() || c.size() != delivered.size()) {
    throw std::domain_error("relaxed objective: size mismatch");
  }
  double total = 0.0;
  for (double x : c) {
    if (!(x >= 0.0 && x <= packets_per_content + 1e-12)) {
      throw std::domain_error("relaxed objective: need 0 <= c_i <= L");
    }
    total += x;
  }
  if (total > memory + 1e-9) {
    throw std::domain_error("relaxed objective: need sum c_i <= M");
  }
  double value = 0.0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    value += popularity[i] *
             std::max(0.0, packets_per_content - c[i] - delivered[i]);
  }
  return value;
}

// Per-content expected deliveries under `scheme`.
inline std::vector<double> ExpectedDeliveries(
    Scheme scheme, const NeighborCacheDistribution& dist,
    const SystemConfig& cfg) {
  dist.CheckCompatible(cfg);
  std::vector<double> out(dist.content_count());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = ExpectedDelivery(scheme, dist.content(i), cfg).value;
  }
  return out;
}

inline double RelaxedObjective(std::span<const double> c, Scheme scheme,
                               const NeighborCacheDistribution& dist,
                               const SystemConfig& cfg) {
  const std::vector<double> delivered = ExpectedDeliveries(scheme, dist, cfg);
  return RelaxedObjective(c, ZipfPopularity(cfg).probs(), delivered,
                          cfg.packets_per_content(), cfg.memory_packets());
}

struct JensenGapResult {
  double gap = 0.0;
  double bound = 0.0;
  bool ok = false;
  bool degenerate = false;
  double load = 0.0;         // average load
  double lower_bound = 0.0;  // positive part taken outside the expectation
};

// Compares the average load with sum_i f_i (L - c_i - E[u B(u)])^+ and the
// bound T |c| (orthogonal) or T |c'| (non-orthogonal).
inline JensenGapResult JensenGapCheck(const Placement& placement, Scheme scheme,
                                      const NeighborCacheDistribution& dist,
                                      const SystemConfig& cfg) {
  const SystemConfig scheme_cfg = cfg.WithScheme(scheme);
  const int truncation = PoissonTruncation(scheme_cfg);
  const LinkBudget lb = BuildLinkBudget(scheme_cfg, std::max(1, truncation));
  const LoadEvaluation eval = AverageLoadFast(placement, dist, scheme_cfg, lb);
  const ContentPopularity popularity = ZipfPopularity(scheme_cfg);
  const int packets = scheme_cfg.packets_per_content();

  JensenGapResult out;
  out.load = eval.total;
  for (std::size_t i = 0; i < placement.size(); ++i) {
    const double mean =
        high_mobility_internal::TransmitterMean(dist.content(i), scheme_cfg);
    double delivered = 0.0;
    for (int u = 1; u <= truncation; ++u) {
      delivered += PoissonPmf(mean, u) * u * lb.budget(u);
    }
    out.lower_bound +=
        popularity[i] * std::max(0.0, packets - placement[i] - delivered);
  }
  out.gap = std::abs(out.load - out.lower_bound);
  const GapConstant constant = JensenGapConstant(scheme, scheme_cfg);
  out.degenerate = constant.degenerate;
  out.bound = ExpectedStayTime(scheme_cfg) * std::abs(constant.value);
  const double slack =
      1e-9 + eval.truncation_bound +
      out.bound * PoissonTail(scheme_cfg.capable_user_mean(), truncation);
  out.ok = out.gap <= out.bound + slack;
  return out;
}

}  // namespace mobcache

#endif  // MOBCACHE_HIGH_MOBILITY_H_
