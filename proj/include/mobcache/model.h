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

// System parameters and the closed-form traffic and mobility distributions:
// Zipf request popularity, the per-content cache distribution of neighboring
// users, the Poisson count of transmit-capable neighbors and the typical
// user's cache placement.

#ifndef MOBCACHE_MODEL_H_
#define MOBCACHE_MODEL_H_

#include <cmath>
#include <cstddef>
#include <limits>
#include <numeric>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/math/distributions/poisson.hpp>

#include "mobcache/errors.h"

namespace mobcache {

inline constexpr std::string_view kVersion = "1.0.0";

// Multiple-access scheme shared by the transmitting neighbors.
enum class Scheme { kOrthogonal, kNonOrthogonal };

inline std::string_view SchemeName(Scheme scheme) {
  return scheme == Scheme::kOrthogonal ? "orthogonal" : "non_orthogonal";
}

inline std::optional<Scheme> ParseScheme(std::string_view name) {
  if (name == "orthogonal" || name == "oma") return Scheme::kOrthogonal;
  if (name == "non_orthogonal" || name == "noma") {
    return Scheme::kNonOrthogonal;
  }
  return std::nullopt;
}

inline double DbToLinear(double db) { return std::pow(10.0, db / 10.0); }
inline double LinearToDb(double linear) { return 10.0 * std::log10(linear); }

// Raw, unvalidated parameters. Defaults are the reference setup: five
// contents of five packets, a five-packet cache, half the arrivals able to
// transmit, 5 dB SINR threshold, range 5, path-loss exponent 4, 20 dB SNR.
struct ModelParams {
  int content_count = 5;
  double zipf_exponent = 0.6;
  int packets_per_content = 5;
  int memory_packets = 5;
  double energy_probability = 0.5;
  double arrival_rate = 1.0;
  double departure_rate = 1.0;
  double sinr_threshold = 3.1622776601683795;  // 5 dB
  double radius = 5.0;
  double path_loss_exponent = 4.0;
  double snr = 100.0;  // 20 dB
  Scheme scheme = Scheme::kOrthogonal;
  double truncation_epsilon = 1e-12;
  int quadrature_nodes = 64;
};

// Validated, immutable system configuration. tau and snr are linear.
class SystemConfig {
 public:
  SystemConfig() : SystemConfig(ModelParams{}) {}
  explicit SystemConfig(const ModelParams& params) : params_(params) {
    Validate(params_);
  }

  const ModelParams& params() const { return params_; }

  int content_count() const { return params_.content_count; }
  double zipf_exponent() const { return params_.zipf_exponent; }
  int packets_per_content() const { return params_.packets_per_content; }
  int memory_packets() const { return params_.memory_packets; }
  double energy_probability() const { return params_.energy_probability; }
  double arrival_rate() const { return params_.arrival_rate; }
  double departure_rate() const { return params_.departure_rate; }
  double sinr_threshold() const { return params_.sinr_threshold; }
  double radius() const { return params_.radius; }
  double path_loss_exponent() const { return params_.path_loss_exponent; }
  double snr() const { return params_.snr; }
  Scheme scheme() const { return params_.scheme; }
  double truncation_epsilon() const { return params_.truncation_epsilon; }
  int quadrature_nodes() const { return params_.quadrature_nodes; }

  // Mean number of transmit-capable neighbors, eta * lambda / mu.
  double capable_user_mean() const {
    return params_.energy_probability * params_.arrival_rate /
           params_.departure_rate;
  }

  SystemConfig WithScheme(Scheme scheme) const {
    ModelParams p = params_;
    p.scheme = scheme;
    return SystemConfig(p);
  }

 private:
  static void Validate(const ModelParams& p) {
    auto finite = [](double x) { return std::isfinite(x); };
    if (p.content_count < 1) throw InvalidConfig("F", "must be >= 1");
    if (!(p.zipf_exponent >= 0.0) || !finite(p.zipf_exponent)) {
      throw InvalidConfig("gamma", "must be a finite value >= 0");
    }
    if (p.packets_per_content < 1) throw InvalidConfig("L", "must be >= 1");
    const long long capacity =
        static_cast<long long>(p.content_count) * p.packets_per_content;
    if (p.memory_packets < 0 || p.memory_packets > capacity) {
      throw InvalidConfig("M", "must lie in [0, F*L] = [0, " +
                                   std::to_string(capacity) + "]");
    }
    if (!(p.energy_probability >= 0.0 && p.energy_probability <= 1.0)) {
      throw InvalidConfig("eta", "must lie in [0, 1]");
    }
    if (!(p.arrival_rate >= 0.0) || !finite(p.arrival_rate)) {
      throw InvalidConfig("lambda", "must be a finite value >= 0");
    }
    if (!(p.departure_rate > 0.0) || !finite(p.departure_rate)) {
      throw InvalidConfig("mu", "must be a finite value > 0");
    }
    if (!(p.sinr_threshold > 0.0) || !finite(p.sinr_threshold)) {
      throw InvalidConfig("tau", "must be a finite value > 0");
    }
    if (!(p.radius > 0.0) || !finite(p.radius)) {
      throw InvalidConfig("radius", "must be a finite value > 0");
    }
    if (!(p.path_loss_exponent > 0.0) || !finite(p.path_loss_exponent)) {
      throw InvalidConfig("alpha", "must be a finite value > 0");
    }
    if (!(p.snr > 0.0) || !finite(p.snr)) {
      throw InvalidConfig("snr", "must be a finite value > 0");
    }
    if (!(p.truncation_epsilon > 0.0 && p.truncation_epsilon < 1.0)) {
      throw InvalidConfig("n_trunc_epsilon", "must lie in (0, 1)");
    }
    if (p.quadrature_nodes < 8) {
      throw InvalidConfig("quad_nodes", "must be >= 8");
    }
    const double mean =
        p.energy_probability * p.arrival_rate / p.departure_rate;
    if (!finite(mean)) {
      throw InvalidConfig("lambda", "eta*lambda/mu must be finite");
    }
  }

  ModelParams params_;
};

// Request probabilities, f_1 >= f_2 >= ... > 0, summing to one.
class ContentPopularity {
 public:
  explicit ContentPopularity(std::vector<double> probs)
      : probs_(std::move(probs)) {
    if (probs_.empty()) throw std::domain_error("popularity: empty vector");
    double sum = 0.0;
    for (std::size_t i = 0; i < probs_.size(); ++i) {
      if (!(probs_[i] > 0.0)) {
        throw std::domain_error("popularity: entries must be positive");
      }
      if (i > 0 && probs_[i] > probs_[i - 1]) {
        throw std::domain_error("popularity: must be non-increasing");
      }
      sum += probs_[i];
    }
    if (std::abs(sum - 1.0) > 1e-12) {
      throw std::domain_error("popularity: must sum to 1");
    }
  }

  // Normalizes non-negative, non-increasing weights.
  static ContentPopularity FromWeights(std::span<const double> weights) {
    const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
    if (!(total > 0.0)) throw std::domain_error("popularity: zero weights");
    std::vector<double> probs(weights.begin(), weights.end());
    for (double& p : probs) p /= total;
    return ContentPopularity(std::move(probs));
  }

  std::size_t size() const { return probs_.size(); }
  double operator[](std::size_t i) const { return probs_[i]; }
  std::span<const double> probs() const { return probs_; }

 private:
  std::vector<double> probs_;
};

// f_i = i^-gamma / sum_j j^-gamma.
inline ContentPopularity ZipfPopularity(int content_count, double gamma) {
  if (content_count < 1) throw std::domain_error("zipf: F must be >= 1");
  if (!(gamma >= 0.0)) throw std::domain_error("zipf: gamma must be >= 0");
  std::vector<double> weights(content_count);
  for (int i = 0; i < content_count; ++i) {
    weights[i] = std::pow(static_cast<double>(i + 1), -gamma);
  }
  return ContentPopularity::FromWeights(weights);
}

inline ContentPopularity ZipfPopularity(const SystemConfig& cfg) {
  return ZipfPopularity(cfg.content_count(), cfg.zipf_exponent());
}

// Per content i, the PMF over {0..L} of the number of packets of i that a
// neighboring user caches. Neighbors are i.i.d.
class NeighborCacheDistribution {
 public:
  NeighborCacheDistribution(std::vector<std::vector<double>> pmfs,
                            int packets_per_content)
      : pmfs_(std::move(pmfs)), packets_per_content_(packets_per_content) {
    if (pmfs_.empty()) throw std::domain_error("cache pmf: no contents");
    for (const auto& pmf : pmfs_) {
      if (pmf.size() != static_cast<std::size_t>(packets_per_content + 1)) {
        throw std::domain_error("cache pmf: each pmf needs L+1 entries");
      }
      double sum = 0.0;
      for (double p : pmf) {
        if (!(p >= 0.0)) {
          throw std::domain_error("cache pmf: entries must be >= 0");
        }
        sum += p;
      }
      if (std::abs(sum - 1.0) > 1e-12) {
        throw std::domain_error("cache pmf: must sum to 1");
      }
    }
  }

  // Every content uses the same PMF.
  static NeighborCacheDistribution Identical(int content_count,
                                             std::vector<double> pmf) {
    const int packets = static_cast<int>(pmf.size()) - 1;
    return NeighborCacheDistribution(
        std::vector<std::vector<double>>(content_count, std::move(pmf)),
        packets);
  }

  // q_i(d) = 1/(L+1) for every content.
  static NeighborCacheDistribution Uniform(int content_count,
                                           int packets_per_content) {
    return Identical(content_count,
                     std::vector<double>(packets_per_content + 1,
                                         1.0 / (packets_per_content + 1)));
  }

  static NeighborCacheDistribution Uniform(const SystemConfig& cfg) {
    return Uniform(cfg.content_count(), cfg.packets_per_content());
  }

  std::size_t content_count() const { return pmfs_.size(); }
  int packets_per_content() const { return packets_per_content_; }
  std::span<const double> content(std::size_t i) const { return pmfs_.at(i); }

  bool homogeneous() const {
    for (const auto& pmf : pmfs_) {
      if (pmf != pmfs_.front()) return false;
    }
    return true;
  }

  // Throws unless the shape matches the configuration.
  void CheckCompatible(const SystemConfig& cfg) const {
    if (static_cast<int>(pmfs_.size()) != cfg.content_count() ||
        packets_per_content_ != cfg.packets_per_content()) {
      throw std::domain_error("cache pmf: shape does not match F and L");
    }
  }

 private:
  std::vector<std::vector<double>> pmfs_;
  int packets_per_content_;
};

// True when 0 <= c_i <= L for all i and sum c_i <= capacity.
inline bool IsFeasiblePlacement(std::span<const int> counts,
                                int packets_per_content, long long capacity) {
  long long total = 0;
  for (int c : counts) {
    if (c < 0 || c > packets_per_content) return false;
    total += c;
  }
  return total <= capacity;
}

// The typical user's cache: c_i packets of content i.
class Placement {
 public:
  Placement(std::vector<int> counts, int packets_per_content,
            long long capacity)
      : counts_(std::move(counts)) {
    if (counts_.empty()) throw std::domain_error("placement: empty");
    if (!IsFeasiblePlacement(counts_, packets_per_content, capacity)) {
      throw std::domain_error(
          "placement: need 0 <= c_i <= L and sum c_i <= M");
    }
  }

  Placement(std::vector<int> counts, const SystemConfig& cfg)
      : Placement(std::move(counts), cfg.packets_per_content(),
                  cfg.memory_packets()) {
    if (static_cast<int>(counts_.size()) != cfg.content_count()) {
      throw std::domain_error("placement: needs exactly F entries");
    }
  }

  static Placement Empty(const SystemConfig& cfg) {
    return Placement(std::vector<int>(cfg.content_count(), 0), cfg);
  }

  std::size_t size() const { return counts_.size(); }
  int operator[](std::size_t i) const { return counts_[i]; }
  std::span<const int> counts() const { return counts_; }
  int total() const { return std::accumulate(counts_.begin(), counts_.end(), 0); }

  friend bool operator==(const Placement&, const Placement&) = default;

 private:
  std::vector<int> counts_;
};

inline std::string ToString(const Placement& placement) {
  std::string out = "[";
  for (std::size_t i = 0; i < placement.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(placement[i]);
  }
  return out + "]";
}

inline std::ostream& operator<<(std::ostream& os, const Placement& placement) {
  return os << ToString(placement);
}

// Poisson(mean) PMF at n; mean 0 is the point mass at 0.
inline double PoissonPmf(double mean, int n) {
  if (n < 0) return 0.0;
  if (mean == 0.0) return n == 0 ? 1.0 : 0.0;
  return boost::math::pdf(boost::math::poisson_distribution<double>(mean),
                          static_cast<double>(n));
}

// P[X > n] for X ~ Poisson(mean).
inline double PoissonTail(double mean, int n) {
  if (n < 0) return 1.0;
  if (mean == 0.0) return 0.0;
  return boost::math::cdf(boost::math::complement(
      boost::math::poisson_distribution<double>(mean),
      static_cast<double>(n)));
}

// Smallest N with P[X > N] < epsilon.
inline int PoissonTruncation(double mean, double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw std::domain_error("truncation epsilon must lie in (0, 1)");
  }
  int n = 0;
  while (PoissonTail(mean, n) >= epsilon) {
    if (n == std::numeric_limits<int>::max()) {
      throw CapacityError("Poisson truncation point overflows int");
    }
    ++n;
  }
  return n;
}

// p_n: probability that n neighbors are able to transmit.
inline double CapableUserPmf(const SystemConfig& cfg, int n) {
  if (n < 0) throw std::domain_error("capable_user_pmf: n must be >= 0");
  return PoissonPmf(cfg.capable_user_mean(), n);
}

inline int PoissonTruncation(const SystemConfig& cfg) {
  return PoissonTruncation(cfg.capable_user_mean(), cfg.truncation_epsilon());
}

// T = 1/mu.
inline double ExpectedStayTime(const SystemConfig& cfg) {
  return 1.0 / cfg.departure_rate();
}

}  // namespace mobcache

#endif  // MOBCACHE_MODEL_H_
