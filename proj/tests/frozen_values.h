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

// Constants produced by tests/oracles/derive_values.py (mpmath, 40 digits,
// closed-form interference factor for path-loss exponent 4, multiset
// enumeration of neighbor caches). Reference setup: F=5, gamma=0.6, L=5,
// M=5, eta=0.5, tau=5 dB, R=5, alpha=4, uniform neighbor caches.

#ifndef MOBCACHE_TESTS_FROZEN_VALUES_H_
#define MOBCACHE_TESTS_FROZEN_VALUES_H_

#include <array>

namespace mobcache::frozen {

inline constexpr std::array<double, 5> kZipf5Gamma06 = {
    0.33410825480376469, 0.22042924263404668, 0.17282813880860248,
    0.14542906471065116, 0.127205299042935};

inline constexpr double kExpMinusHalf = 0.60653065971263342;

// beta(r = R) at tau = 5 dB.
inline constexpr double kBetaAtRadius = 0.089042734657853648;

inline constexpr std::array<double, 5> kSnrDb = {0, 10, 20, 30, 40};
inline constexpr std::array<int, 4> kUsers = {1, 2, 3, 5};
// kSuccess[snr index][user index] = P[rho > tau | u].
inline constexpr std::array<std::array<double, 4>, 5> kSuccess = {{
    {0.019934480947138906, 0.019243756853915197, 0.018590161117949912,
     0.017384484238470658},
    {0.063038363766189558, 0.056472139873298416, 0.050938251833385895,
     0.042209868688987076},
    {0.19934480940693864, 0.14357573482149956, 0.10955456563267051,
     0.072054769175473041},
    {0.60088663983813799, 0.26964657692114019, 0.16004356794835839,
     0.085276483837150298},
    {0.93784848826104666, 0.33190518712088666, 0.17545145846174759,
     0.087522752169346667},
}};

// B(1) at 20 dB, mu = 1.
inline constexpr int kFirstBudget20Db = 1;

// Expected D2D deliveries at 20 dB, lambda = 1.
inline constexpr double kNuMu1 = 0.27468359591685156;
inline constexpr double kZetaMu1 = 0.52848062773673881;
inline constexpr double kNuMu10 = 0.0;
inline constexpr double kZetaMu10 = 0.0058539820738091718;
// 40 dB, lambda = mu = 1.
inline constexpr double kNu40DbMu1 = 2.042829583344569;

// Average load, lambda = mu = 1.
inline constexpr double kLoadOma20Db50000 = 3.1465491869193267;
inline constexpr double kLoadOma20Db22100 = 3.4434132703989232;
inline constexpr double kLoadOma40Db50000 = 2.5832180611684791;
inline constexpr double kLoadOma40Db22100 = 2.7613272370174322;
inline constexpr double kLoadNoma20Db50000 = 3.0703368789768893;
inline constexpr double kLoadNoma20Db22100 = 3.328961772100235;
inline constexpr double kLoadNoma40Db50000 = 2.6276703903445654;
inline constexpr double kLoadNoma40Db22100 = 2.785386989913164;

}  // namespace mobcache::frozen

#endif  // MOBCACHE_TESTS_FROZEN_VALUES_H_
