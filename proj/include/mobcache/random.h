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

// Counter-derived random streams and the small statistics used by the Monte
// Carlo estimators.

#ifndef MOBCACHE_RANDOM_H_
#define MOBCACHE_RANDOM_H_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

namespace mobcache {

inline std::uint64_t Mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// SplitMix64. Satisfies UniformRandomBitGenerator and is cheap to seed, so
// every trial can own a fresh stream.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit SplitMix64(std::uint64_t state) : state_(state) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }

  result_type operator()() {
    state_ += 0x9e3779b97f4a7c15ULL;
    return Mix64(state_);
  }

  // Uniform on [0, 1) with 53 random bits.
  double Uniform() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

// Stream for trial `index` under `seed`. Streams for different indices are
// decorrelated by hashing, so trial k sees the same numbers regardless of
// how many trials run or in which order.
inline SplitMix64 TrialStream(std::uint64_t seed, std::uint64_t index) {
  return SplitMix64(Mix64(seed ^ Mix64(index + 0x632be59bd9b4e019ULL)));
}

// Pairwise (cascade) summation in a fixed order.
inline double PairwiseSum(std::span<const double> values) {
  if (values.size() <= 8) {
    double s = 0.0;
    for (double v : values) s += v;
    return s;
  }
  const std::size_t half = values.size() / 2;
  return PairwiseSum(values.first(half)) + PairwiseSum(values.subspan(half));
}

struct McEstimate {
  double estimate = 0.0;
  double standard_error = 0.0;
  std::int64_t trials = 0;
};

// Sample mean and standard error of the mean. Works on data shifted by the
// first sample, so constant samples give exactly zero error.
inline McEstimate Summarize(std::span<const double> samples) {
  McEstimate out;
  out.trials = static_cast<std::int64_t>(samples.size());
  if (samples.empty()) return out;
  const double n = static_cast<double>(samples.size());
  const double shift = samples[0];
  std::vector<double> d(samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) d[i] = samples[i] - shift;
  const double mean_shifted = PairwiseSum(d) / n;
  out.estimate = shift + mean_shifted;
  if (samples.size() < 2) return out;
  for (double& x : d) {
    x -= mean_shifted;
    x *= x;
  }
  const double variance = PairwiseSum(d) / (n - 1.0);
  out.standard_error = std::sqrt(variance / n);
  return out;
}

// |estimate - reference| in standard errors. A zero-variance estimate has
// no error scale: it scores 0 when it matches to rounding, infinity
// otherwise.
inline double ZScore(const McEstimate& mc, double reference) {
  const double diff = std::abs(mc.estimate - reference);
  if (mc.standard_error > 0.0) return diff / mc.standard_error;
  const double tolerance = 1e-12 * std::max(1.0, std::abs(reference));
  return diff <= tolerance ? 0.0 : std::numeric_limits<double>::infinity();
}

}  // namespace mobcache

#endif  // MOBCACHE_RANDOM_H_
