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

#ifndef MOBCACHE_VALIDATION_H_
#define MOBCACHE_VALIDATION_H_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "mobcache/channel.h"
#include "mobcache/high_mobility.h"
#include "mobcache/load.h"
#include "mobcache/model.h"
#include "mobcache/optimize.h"
#include "mobcache/random.h"

namespace mobcache {

struct SuiteResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct ValidationOptions {
  std::uint64_t seed = 1;
  int random_instances = 100;
  std::int64_t mc_trials = 1'000'000;
  std::int64_t submodularity_samples = 10'000;
};

namespace validation_internal {

// Draws a small instance: F, L <= 3, truncation point <= 4, random scheme,
// SNR, placement and per-content cache PMFs.
struct SmallInstance {
  SystemConfig cfg;
  NeighborCacheDistribution dist;
  Placement placement;
};

inline double UniformIn(SplitMix64& rng, double lo, double hi) {
  return lo + (hi - lo) * rng.Uniform();
}

inline std::vector<double> RandomPmf(int packets, SplitMix64& rng) {
  std::vector<double> pmf(packets + 1);
  double total = 0.0;
  for (double& p : pmf) {
    p = rng.Uniform() < 0.2 ? 0.0 : rng.Uniform();
    total += p;
  }
  if (total == 0.0) {
    pmf[0] = 1.0;
    return pmf;
  }
  for (double& p : pmf) p /= total;
  return pmf;
}

inline SmallInstance RandomSmallInstance(SplitMix64& rng) {
  ModelParams p;
  p.content_count = 1 + static_cast<int>(rng() % 3);
  p.packets_per_content = 1 + static_cast<int>(rng() % 3);
  p.memory_packets = static_cast<int>(
      rng() % static_cast<std::uint64_t>(p.content_count *
                                             p.packets_per_content +
                                         1));
  p.zipf_exponent = UniformIn(rng, 0.0, 1.5);
  p.energy_probability = UniformIn(rng, 0.1, 1.0);
  p.arrival_rate = UniformIn(rng, 0.1, 2.0);
  p.departure_rate = UniformIn(rng, 0.5, 4.0);
  p.snr = DbToLinear(UniformIn(rng, 0.0, 40.0));
  p.scheme = rng() % 2 ? Scheme::kNonOrthogonal : Scheme::kOrthogonal;
  p.quadrature_nodes = 32;
  // Loosest epsilon that keeps the truncation point within the cap.
  p.truncation_epsilon = 1e-12;
  const double mean =
      p.energy_probability * p.arrival_rate / p.departure_rate;
  while (PoissonTruncation(mean, p.truncation_epsilon) > 4) {
    p.truncation_epsilon *= 10.0;
  }
  const SystemConfig cfg(p);
  std::vector<std::vector<double>> pmfs;
  for (int i = 0; i < p.content_count; ++i) {
    pmfs.push_back(RandomPmf(p.packets_per_content, rng));
  }
  // Random feasible placement: scatter M packets over non-full contents.
  std::vector<int> counts(p.content_count, 0);
  const int fill = static_cast<int>(
      rng() % static_cast<std::uint64_t>(p.memory_packets + 1));
  for (int k = 0; k < fill; ++k) {
    std::vector<int> open;
    for (int i = 0; i < p.content_count; ++i) {
      if (counts[i] < p.packets_per_content) open.push_back(i);
    }
    if (open.empty()) break;
    ++counts[open[rng() % open.size()]];
  }
  return {cfg, NeighborCacheDistribution(std::move(pmfs), p.packets_per_content),
          Placement(std::move(counts), cfg)};
}

}  // namespace validation_internal

// Enumeration and the fast path agree within 1e-9 plus the reported
// truncation bounds on random small instances and on the reference setup
// (truncated at five neighbors).
inline SuiteResult ValidateEnumVsFast(const ValidationOptions& options) {
  SuiteResult out{"enum_vs_fast", true, ""};
  double worst = 0.0;
  int checked = 0;
  auto check = [&](const Placement& placement,
                   const NeighborCacheDistribution& dist,
                   const SystemConfig& cfg, const std::string& label) {
    const LoadEvaluation exact = AverageLoadEnum(placement, dist, cfg);
    const LoadEvaluation fast = AverageLoadFast(placement, dist, cfg);
    const double diff = std::abs(exact.total - fast.total);
    worst = std::max(worst, diff);
    ++checked;
    if (diff > 1e-9 + exact.truncation_bound + fast.truncation_bound &&
        out.passed) {
      out.passed = false;
      out.detail = label + ": enum " + FormatDouble(exact.total, 17) +
                   " vs fast " + FormatDouble(fast.total, 17) + "; ";
    }
  };
  SplitMix64 rng = TrialStream(options.seed, 0);
  for (int k = 0; k < options.random_instances; ++k) {
    const auto inst = validation_internal::RandomSmallInstance(rng);
    check(inst.placement, inst.dist, inst.cfg,
          "instance " + std::to_string(k));
  }
  for (Scheme scheme : {Scheme::kOrthogonal, Scheme::kNonOrthogonal}) {
    ModelParams p;
    p.scheme = scheme;
    p.truncation_epsilon = 1e-4;  // five neighbors at mean 0.5
    const SystemConfig cfg(p);
    const auto dist = NeighborCacheDistribution::Uniform(cfg);
    for (const std::vector<int>& counts :
         {std::vector<int>{5, 0, 0, 0, 0}, std::vector<int>{2, 2, 1, 0, 0},
          std::vector<int>{1, 1, 1, 1, 1}}) {
      check(Placement(counts, cfg), dist, cfg,
            "reference " + std::string(SchemeName(scheme)));
    }
  }
  out.detail += std::to_string(checked) + " instances, max |diff| " +
                FormatDouble(worst, 3);
  return out;
}

// Quadrature against Monte Carlo for u in {1,2,3,5} at 0..30 dB, and
// self-convergence under node doubling.
inline SuiteResult ValidateQuadratureVsMc(const ValidationOptions& options) {
  SuiteResult out{"quadrature_vs_mc", true, ""};
  double worst_z = 0.0;
  double worst_doubling = 0.0;
  std::uint64_t stream = 0;
  for (double snr_db : {0.0, 10.0, 20.0, 30.0}) {
    ModelParams p;
    p.snr = DbToLinear(snr_db);
    const SystemConfig cfg(p);
    ModelParams fine = p;
    fine.quadrature_nodes = 2 * p.quadrature_nodes;
    const SystemConfig cfg_fine(fine);
    for (int u : {1, 2, 3, 5}) {
      const double quad = SuccessProbability(u, cfg);
      const McEstimate mc = SuccessProbabilityMc(
          u, cfg, options.mc_trials, Mix64(options.seed + ++stream));
      const double z = ZScore(mc, quad);
      const double doubling = std::abs(quad - SuccessProbability(u, cfg_fine));
      worst_z = std::max(worst_z, z);
      worst_doubling = std::max(worst_doubling, doubling);
      if ((z > 3.0 || doubling > 1e-8) && out.passed) {
        out.passed = false;
        out.detail = "u=" + std::to_string(u) + " at " +
                     FormatDouble(snr_db, 3) + " dB: quad " +
                     FormatDouble(quad, 12) + " mc " +
                     FormatDouble(mc.estimate, 12) + "; ";
      }
    }
  }
  out.detail += "max |z| " + FormatDouble(worst_z, 3) +
                ", max node-doubling change " + FormatDouble(worst_doubling, 3);
  return out;
}

// Diminishing returns on the reference setup, both schemes, plus the
// matroid axioms for every F*L <= 12 and every M.
inline SuiteResult ValidateSubmodularity(const ValidationOptions& options) {
  SuiteResult out{"submodularity", true, ""};
  std::ostringstream detail;
  for (Scheme scheme : {Scheme::kOrthogonal, Scheme::kNonOrthogonal}) {
    ModelParams p;
    p.scheme = scheme;
    const SystemConfig cfg(p);
    const SubmodularityReport report =
        CheckSubmodularity(NeighborCacheDistribution::Uniform(cfg), cfg,
                           options.submodularity_samples, options.seed);
    if (!report.passed()) {
      out.passed = false;
      detail << SchemeName(scheme) << ": " << report.counterexample << "; ";
    }
    detail << SchemeName(scheme) << " " << report.violations << "/"
           << report.samples << " violations; ";
  }
  return out.detail = detail.str(), out;
}

inline SuiteResult ValidateMatroid() {
  SuiteResult out{"matroid", true, ""};
  int systems = 0;
  for (int f = 1; f <= kMatroidMaxGround; ++f) {
    for (int l = 1; f * l <= kMatroidMaxGround; ++l) {
      for (int m = 0; m <= f * l; ++m) {
        const MatroidReport report = CheckMatroidAxioms(f, l, m);
        ++systems;
        if (!report.passed && out.passed) {
          out.passed = false;
          out.detail = "F=" + std::to_string(f) + " L=" + std::to_string(l) +
                       " M=" + std::to_string(m) + ": " +
                       report.counterexample + "; ";
        }
      }
    }
  }
  out.detail += std::to_string(systems) + " set systems checked";
  return out;
}

// Jensen-gap bound across mu in {1,2,5,10,20} at 20 and 40 dB on the greedy
// placement, both schemes; the gap at the largest mu is the sweep minimum.
inline SuiteResult ValidateJensen(const ValidationOptions& /*options*/) {
  SuiteResult out{"jensen_bound", true, ""};
  const std::vector<double> mus = {1, 2, 5, 10, 20};
  double worst_ratio = 0.0;
  for (double snr_db : {20.0, 40.0}) {
    for (Scheme scheme : {Scheme::kOrthogonal, Scheme::kNonOrthogonal}) {
      std::vector<double> gaps;
      for (double mu : mus) {
        ModelParams p;
        p.snr = DbToLinear(snr_db);
        p.departure_rate = mu;
        p.scheme = scheme;
        const SystemConfig cfg(p);
        const auto dist = NeighborCacheDistribution::Uniform(cfg);
        const Placement placement = GreedyPlacement(dist, cfg).placement;
        const JensenGapResult r = JensenGapCheck(placement, scheme, dist, cfg);
        gaps.push_back(r.gap);
        if (r.bound > 0.0) worst_ratio = std::max(worst_ratio, r.gap / r.bound);
        if (!r.ok && out.passed) {
          out.passed = false;
          out.detail = std::string(SchemeName(scheme)) + " " +
                       FormatDouble(snr_db, 3) + " dB mu=" +
                       FormatDouble(mu, 3) + ": gap " + FormatDouble(r.gap, 6) +
                       " > bound " + FormatDouble(r.bound, 6) + "; ";
        }
      }
      const double last = gaps.back();
      if (*std::min_element(gaps.begin(), gaps.end()) < last - 1e-12 &&
          out.passed) {
        out.passed = false;
        out.detail = std::string(SchemeName(scheme)) + " " +
                     FormatDouble(snr_db, 3) +
                     " dB: gap at the largest mu is not the minimum; ";
      }
    }
  }
  out.detail += "max gap/bound " + FormatDouble(worst_ratio, 4);
  return out;
}

inline std::vector<SuiteResult> RunValidation(const ValidationOptions& options) {
  return {ValidateEnumVsFast(options), ValidateQuadratureVsMc(options),
          ValidateSubmodularity(options), ValidateMatroid(),
          ValidateJensen(options)};
}

}  // namespace mobcache

#endif  // MOBCACHE_VALIDATION_H_
