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

// Cache placement as a set function. The ground set holds one element per
// (content, packet) pair; because packets are MDS-coded only the count per
// content matters, so a set C maps to the placement c_i = |C ∩ S_i|. The
// feasible sets {C : |C| <= M} form a uniform matroid and the load reduction
// is monotone submodular, which is what the greedy and the brute-force
// checkers below rely on and verify.

#ifndef MOBCACHE_OPTIMIZE_H_
#define MOBCACHE_OPTIMIZE_H_

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "mobcache/channel.h"
#include "mobcache/errors.h"
#include "mobcache/load.h"
#include "mobcache/model.h"
#include "mobcache/random.h"

namespace mobcache {

// Packet set in canonical form: per content, how many of its packets are in
// the set (the prefix s_i^1..s_i^{c_i}).
class PacketSet {
 public:
  PacketSet(int content_count, int packets_per_content)
      : packets_per_content_(packets_per_content),
        counts_(content_count, 0) {
    if (content_count < 1 || packets_per_content < 1) {
      throw std::domain_error("packet set: F and L must be >= 1");
    }
  }

  static PacketSet FromPlacement(const Placement& placement,
                                 int packets_per_content) {
    PacketSet set(static_cast<int>(placement.size()), packets_per_content);
    for (std::size_t i = 0; i < placement.size(); ++i) {
      set.counts_[i] = placement[i];
    }
    return set;
  }

  // Element e = i * L + l stands for packet l (0-based) of content i.
  static PacketSet FromElements(int content_count, int packets_per_content,
                                std::span<const int> elements) {
    PacketSet set(content_count, packets_per_content);
    std::vector<bool> seen(set.ground_size(), false);
    for (int e : elements) {
      if (e < 0 || e >= set.ground_size()) {
        throw std::domain_error("packet set: element outside ground set");
      }
      if (seen[e]) continue;
      seen[e] = true;
      ++set.counts_[e / packets_per_content];
    }
    return set;
  }

  // Bit e of `mask` selects element e; requires F*L <= 64.
  static PacketSet FromMask(int content_count, int packets_per_content,
                            std::uint64_t mask) {
    PacketSet set(content_count, packets_per_content);
    if (set.ground_size() > 64) {
      throw std::domain_error("packet set: mask form needs F*L <= 64");
    }
    for (int e = 0; e < set.ground_size(); ++e) {
      if (mask >> e & 1U) ++set.counts_[e / packets_per_content];
    }
    return set;
  }

  int ground_size() const {
    return static_cast<int>(counts_.size()) * packets_per_content_;
  }
  int size() const {
    int total = 0;
    for (int c : counts_) total += c;
    return total;
  }
  std::span<const int> counts() const { return counts_; }

  // Membership in I = {C : |C| <= M}, decided through placement feasibility.
  bool IsIndependent(int memory_packets) const {
    return IsFeasiblePlacement(counts_, packets_per_content_, memory_packets);
  }

  Placement ToPlacement(int memory_packets) const {
    return Placement(counts_, packets_per_content_, memory_packets);
  }

  // Canonical element list: the first c_i packets of each content.
  std::vector<int> Elements() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < counts_.size(); ++i) {
      for (int l = 0; l < counts_[i]; ++l) {
        out.push_back(static_cast<int>(i) * packets_per_content_ + l);
      }
    }
    return out;
  }

 private:
  int packets_per_content_;
  std::vector<int> counts_;
};

struct GreedyStep {
  int content = 0;
  double gain = 0.0;
};

struct GreedyResult {
  Placement placement;
  std::vector<GreedyStep> trace;
};

// Adds M packets one at a time, each time the packet with the largest drop
// in average load; ties go to the lowest content index. Gains depend only on
// per-content counts, so the shortfall tables are computed once.
inline GreedyResult GreedyPlacement(const NeighborCacheDistribution& dist,
                                    const SystemConfig& cfg) {
  const LinkBudget lb = BuildLinkBudget(cfg);
  const auto tables = ShortfallTables(dist, cfg, lb);
  const ContentPopularity popularity = ZipfPopularity(cfg);
  const int packets = cfg.packets_per_content();
  std::vector<int> counts(cfg.content_count(), 0);
  std::vector<GreedyStep> trace;
  trace.reserve(cfg.memory_packets());
  for (int step = 0; step < cfg.memory_packets(); ++step) {
    int best = -1;
    double best_gain = 0.0;
    for (int i = 0; i < cfg.content_count(); ++i) {
      if (counts[i] >= packets) continue;
      const auto& e = tables[i].by_count;
      const double gain = popularity[i] * (e[counts[i]] - e[counts[i] + 1]);
      if (best < 0 || gain > best_gain) {
        best = i;
        best_gain = gain;
      }
    }
    if (best < 0) break;  // every content fully cached
    ++counts[best];
    trace.push_back({best, best_gain});
  }
  return {Placement(std::move(counts), cfg), std::move(trace)};
}

inline constexpr std::int64_t kExhaustiveCap = 1'000'000;

// Number of vectors with 0 <= c_i <= L and sum c_i <= M.
inline std::int64_t CountFeasiblePlacements(int content_count,
                                            int packets_per_content,
                                            int memory_packets) {
  // ways[s] = number of prefixes with sum s, saturating above the cap.
  std::vector<std::int64_t> ways(memory_packets + 1, 0);
  ways[0] = 1;
  const std::int64_t saturate = std::int64_t{1} << 62;
  for (int i = 0; i < content_count; ++i) {
    std::vector<std::int64_t> next(memory_packets + 1, 0);
    for (int s = 0; s <= memory_packets; ++s) {
      if (ways[s] == 0) continue;
      for (int c = 0; c <= packets_per_content && s + c <= memory_packets;
           ++c) {
        next[s + c] = std::min(saturate, next[s + c] + ways[s]);
      }
    }
    ways.swap(next);
  }
  std::int64_t total = 0;
  for (std::int64_t w : ways) total = std::min(saturate, total + w);
  return total;
}

// Minimizer of the average load over all feasible placements. Placements
// are visited in decreasing lexicographic order and a later one only wins by
// more than 1e-12, so ties resolve to the lexicographically greatest, the
// same preference for popular contents as the greedy.
inline Placement ExhaustivePlacement(const NeighborCacheDistribution& dist,
                                     const SystemConfig& cfg,
                                     std::int64_t cap = kExhaustiveCap) {
  const int content_count = cfg.content_count();
  const int packets = cfg.packets_per_content();
  const int memory = cfg.memory_packets();
  const std::int64_t feasible =
      CountFeasiblePlacements(content_count, packets, memory);
  if (feasible > cap) {
    throw CapacityError("exhaustive_placement: " + std::to_string(feasible) +
                        " feasible placements exceed the cap of " +
                        std::to_string(cap));
  }
  const LinkBudget lb = BuildLinkBudget(cfg);
  const auto tables = ShortfallTables(dist, cfg, lb);
  const ContentPopularity popularity = ZipfPopularity(cfg);

  std::vector<int> counts(content_count, 0);
  std::vector<int> best_counts;
  double best = 0.0;
  // Depth-first; partial sums accumulate in content order.
  auto visit = [&](auto&& self, int i, int remaining, double partial) -> void {
    if (i == content_count) {
      if (best_counts.empty() || partial < best - 1e-12) {
        best = partial;
        best_counts = counts;
      }
      return;
    }
    for (int c = std::min(packets, remaining); c >= 0; --c) {
      counts[i] = c;
      self(self, i + 1, remaining - c,
           partial + popularity[i] * tables[i].by_count[c]);
    }
    counts[i] = 0;
  };
  visit(visit, 0, memory, 0.0);
  return Placement(std::move(best_counts), cfg);
}

struct MatroidReport {
  bool passed = true;
  std::uint64_t independent_sets = 0;
  std::string counterexample;
};

inline constexpr int kMatroidMaxGround = 12;

// Brute-force check of the matroid axioms for (S, I) over all 2^(F*L)
// subsets: I is nonempty, closed under subsets, and has the exchange
// property.
inline MatroidReport CheckMatroidAxioms(int content_count,
                                        int packets_per_content,
                                        int memory_packets) {
  if (content_count < 1 || packets_per_content < 1 || memory_packets < 0) {
    throw std::domain_error("matroid check: need F, L >= 1 and M >= 0");
  }
  const int ground = content_count * packets_per_content;
  if (ground > kMatroidMaxGround) {
    throw CapacityError("matroid check: ground set of " +
                        std::to_string(ground) + " elements exceeds " +
                        std::to_string(kMatroidMaxGround));
  }
  const std::uint64_t subsets = std::uint64_t{1} << ground;
  std::vector<bool> independent(subsets);
  std::vector<std::uint64_t> members;
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    independent[mask] =
        PacketSet::FromMask(content_count, packets_per_content, mask)
            .IsIndependent(memory_packets);
    if (independent[mask]) members.push_back(mask);
  }

  MatroidReport report;
  report.independent_sets = members.size();
  auto fail = [&](const std::string& why) {
    report.passed = false;
    report.counterexample = why;
    return report;
  };
  if (members.empty()) return fail("I is empty");

  for (std::uint64_t y : members) {
    // Enumerate every submask x of y.
    for (std::uint64_t x = y;; x = (x - 1) & y) {
      if (!independent[x]) {
        return fail("hereditary: subset " + std::to_string(x) + " of " +
                    std::to_string(y) + " is dependent");
      }
      if (x == 0) break;
    }
  }

  // For each X, the elements that can extend it while staying independent.
  std::vector<std::uint64_t> extensions(members.size(), 0);
  for (std::size_t k = 0; k < members.size(); ++k) {
    const std::uint64_t x = members[k];
    for (int e = 0; e < ground; ++e) {
      const std::uint64_t bit = std::uint64_t{1} << e;
      if (!(x & bit) && independent[x | bit]) extensions[k] |= bit;
    }
  }
  for (std::size_t a = 0; a < members.size(); ++a) {
    const std::uint64_t x = members[a];
    const int x_size = std::popcount(x);
    for (std::uint64_t y : members) {
      if (std::popcount(y) <= x_size) continue;
      if ((y & ~x & extensions[a]) == 0) {
        return fail("exchange: no element of " + std::to_string(y) +
                    " extends " + std::to_string(x));
      }
    }
  }
  return report;
}

struct SubmodularityReport {
  std::int64_t samples = 0;
  std::int64_t violations = 0;             // diminishing returns broken
  std::int64_t monotonicity_violations = 0;  // negative marginal gain
  double max_excess = 0.0;  // largest gain(C) - gain(C') observed
  std::string counterexample;

  bool passed() const { return violations == 0 && monotonicity_violations == 0; }
};

inline constexpr double kSubmodularSlack = 1e-9;

// Samples chains C' ⊆ C and a packet s outside C, and checks
//   D(C) - D(C + s) <= D(C') - D(C' + s)   and   both drops >= 0
// with slack 1e-9, where D is the average load. Sets range over the whole
// ground set, not only the feasible ones.
inline SubmodularityReport CheckSubmodularity(
    const NeighborCacheDistribution& dist, const SystemConfig& cfg,
    std::int64_t samples, std::uint64_t seed) {
  if (samples < 1) throw std::domain_error("submodularity: samples >= 1");
  const int content_count = cfg.content_count();
  const int packets = cfg.packets_per_content();
  const LinkBudget lb = BuildLinkBudget(cfg);
  const auto tables = ShortfallTables(dist, cfg, lb);
  const ContentPopularity popularity = ZipfPopularity(cfg);
  auto load = [&](const std::vector<int>& counts) {
    return LoadFromTables(counts, popularity, tables, packets).total;
  };

  SubmodularityReport report;
  report.samples = samples;
  for (std::int64_t k = 0; k < samples; ++k) {
    SplitMix64 rng = TrialStream(seed, static_cast<std::uint64_t>(k));
    auto below = [&rng](int hi) {  // uniform in [0, hi]
      return static_cast<int>(rng() % static_cast<std::uint64_t>(hi + 1));
    };
    const int fresh = static_cast<int>(rng() % content_count);
    std::vector<int> big(content_count);
    for (int i = 0; i < content_count; ++i) {
      big[i] = i == fresh ? below(packets - 1) : below(packets);
    }
    std::vector<int> small = big;
    if (rng() % 8 != 0) {
      for (int i = 0; i < content_count; ++i) small[i] = below(big[i]);
    }
    std::vector<int> big_plus = big;
    std::vector<int> small_plus = small;
    ++big_plus[fresh];
    ++small_plus[fresh];

    const double gain_big = load(big) - load(big_plus);
    const double gain_small = load(small) - load(small_plus);
    report.max_excess = std::max(report.max_excess, gain_big - gain_small);
    const bool diminishing = gain_big <= gain_small + kSubmodularSlack;
    const bool monotone =
        gain_big >= -kSubmodularSlack && gain_small >= -kSubmodularSlack;
    if (!diminishing) ++report.violations;
    if (!monotone) ++report.monotonicity_violations;
    if ((!diminishing || !monotone) && report.counterexample.empty()) {
      std::ostringstream os;
      os << "sample " << k << ": content " << fresh << ", gain(C)=" << gain_big
         << ", gain(C')=" << gain_small;
      report.counterexample = os.str();
    }
  }
  return report;
}

}  // namespace mobcache

#endif  // MOBCACHE_OPTIMIZE_H_
