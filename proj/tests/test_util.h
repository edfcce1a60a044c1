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

#ifndef MOBCACHE_TESTS_TEST_UTIL_H_
#define MOBCACHE_TESTS_TEST_UTIL_H_

#include <cmath>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "mobcache/model.h"

namespace mobcache::testing {

inline SystemConfig Config(double snr_db = 20.0, double lambda = 1.0,
                           double mu = 1.0,
                           Scheme scheme = Scheme::kOrthogonal) {
  ModelParams p;
  p.snr = DbToLinear(snr_db);
  p.arrival_rate = lambda;
  p.departure_rate = mu;
  p.scheme = scheme;
  return SystemConfig(p);
}

// Closed form of the interference factor for path-loss exponent 4:
// with y = x^2, 1 - (c / R^2) atan(R^2 / c), c = sqrt(tau) r^2.
inline double BetaAlpha4(double r, double tau, double radius) {
  if (r == 0.0) return 1.0;
  const double c = std::sqrt(tau) * r * r;
  return 1.0 - (c / (radius * radius)) * std::atan(radius * radius / c);
}

// Random PMF over {0..L}; some entries may be forced to zero.
inline std::vector<double> RandomPmf(int packets, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> pmf(packets + 1);
  double total = 0.0;
  for (double& p : pmf) {
    p = u(rng) < 0.2 ? 0.0 : u(rng);
    total += p;
  }
  if (total == 0.0) {
    pmf[0] = 1.0;
    return pmf;
  }
  for (double& p : pmf) p /= total;
  // Absorb rounding so the sum is 1 to within 1e-15.
  double sum = 0.0;
  for (double p : pmf) sum += p;
  pmf[0] += 1.0 - sum;
  if (pmf[0] < 0.0) pmf[0] = 0.0;
  return pmf;
}

}  // namespace mobcache::testing

#endif  // MOBCACHE_TESTS_TEST_UTIL_H_
