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

// Link layer of the D2D model: the probability that one packet from a
// neighbor uniformly placed in the range-R disc survives Rayleigh fading,
// path loss and the interference of the other u-1 transmitters; the average
// rate R(u) under each multiple-access scheme; and the number of packets
// B(u) = floor(L * R(u) / mu) a neighbor can deliver during its expected
// stay.

#ifndef MOBCACHE_CHANNEL_H_
#define MOBCACHE_CHANNEL_H_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>
#include <vector>

#include "mobcache/model.h"
#include "mobcache/quadrature.h"
#include "mobcache/random.h"

namespace mobcache {

namespace channel_internal {

// x^a / (x^a + tau r^a), written to stay finite at x = 0.
inline double InterferenceKernel(double x, double r, double tau, double a) {
  if (r == 0.0) return 1.0;
  if (x == 0.0) return 0.0;
  return 1.0 / (1.0 + tau * std::pow(r / x, a));
}

// beta^(u-1) through exp/log; beta = 0 gives 0 for u > 1.
inline double InterferencePower(double beta, int u) {
  if (u == 1) return 1.0;
  if (beta <= 0.0) return 0.0;
  return std::exp((u - 1) * std::log(beta));
}

}  // namespace channel_internal

// beta(r): expected interference-free factor of one interferer placed
// uniformly in the disc, int_0^R x^a / (x^a + tau r^a) (2x / R^2) dx.
inline double InterferenceFactor(double r, const SystemConfig& cfg) {
  const double radius = cfg.radius();
  if (!(r >= 0.0 && r <= radius)) {
    throw std::domain_error("interference_factor: r must lie in [0, R]");
  }
  if (r == 0.0) return 1.0;  // every interferer is farther than the link
  const QuadratureRule rule =
      GaussLegendre(cfg.quadrature_nodes(), 0.0, radius);
  double sum = 0.0;
  for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
    const double x = rule.nodes[j];
    sum += rule.weights[j] *
           channel_internal::InterferenceKernel(x, r, cfg.sinr_threshold(),
                                                cfg.path_loss_exponent()) *
           2.0 * x / (radius * radius);
  }
  return sum;
}

// Tabulates the outer integral of the success probability once per
// configuration: at each outer node r_j it stores the noise term
// exp(-r^a tau / snr) times the density weight, and beta(r_j). Any P[.|u]
// is then a weighted sum of beta_j^(u-1).
class SuccessIntegrator {
 public:
  explicit SuccessIntegrator(const SystemConfig& cfg) {
    const double radius = cfg.radius();
    const double tau = cfg.sinr_threshold();
    const double a = cfg.path_loss_exponent();
    const QuadratureRule outer =
        GaussLegendre(cfg.quadrature_nodes(), 0.0, radius);
    const QuadratureRule inner =
        GaussLegendre(cfg.quadrature_nodes(), 0.0, radius);
    const std::size_t n = outer.nodes.size();
    radii_ = outer.nodes;
    weights_.resize(n);
    betas_.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
      const double r = outer.nodes[j];
      weights_[j] = outer.weights[j] * std::exp(-std::pow(r, a) * tau / cfg.snr()) *
                    2.0 * r / (radius * radius);
      double beta = 0.0;
      for (std::size_t k = 0; k < inner.nodes.size(); ++k) {
        const double x = inner.nodes[k];
        beta += inner.weights[k] *
                channel_internal::InterferenceKernel(x, r, tau, a) * 2.0 * x /
                (radius * radius);
      }
      betas_[j] = beta;
    }
  }

  // P[rho > tau | u].
  double operator()(int u) const {
    if (u < 1) throw std::domain_error("success_probability: u must be >= 1");
    double sum = 0.0;
    for (std::size_t j = 0; j < weights_.size(); ++j) {
      sum += weights_[j] * channel_internal::InterferencePower(betas_[j], u);
    }
    return sum;
  }

  const std::vector<double>& radii() const { return radii_; }
  // Quadrature weight x noise term x 2r/R^2 at each outer node.
  const std::vector<double>& weights() const { return weights_; }
  const std::vector<double>& betas() const { return betas_; }

 private:
  std::vector<double> radii_;
  std::vector<double> weights_;
  std::vector<double> betas_;
};

// P[rho > tau | u] by nested Gauss-Legendre quadrature.
inline double SuccessProbability(int u, const SystemConfig& cfg) {
  if (u < 1) throw std::domain_error("success_probability: u must be >= 1");
  return SuccessIntegrator(cfg)(u);
}

// Direct SINR sampling: receiver distance and interferer distances are
// R*sqrt(U), channel power gains are Exp(1). Each trial owns its stream.
inline McEstimate SuccessProbabilityMc(int u, const SystemConfig& cfg,
                                       std::int64_t trials,
                                       std::uint64_t seed) {
  if (u < 1) throw std::domain_error("success_probability_mc: u must be >= 1");
  if (trials < 1) {
    throw std::domain_error("success_probability_mc: trials must be >= 1");
  }
  const double radius = cfg.radius();
  const double a = cfg.path_loss_exponent();
  const double tau = cfg.sinr_threshold();
  const double noise = 1.0 / cfg.snr();  // sigma^2 / P_t
  std::int64_t successes = 0;
  for (std::int64_t t = 0; t < trials; ++t) {
    SplitMix64 rng = TrialStream(seed, static_cast<std::uint64_t>(t));
    std::exponential_distribution<double> fading(1.0);
    const double r = radius * std::sqrt(rng.Uniform());
    const double signal = fading(rng) * std::pow(r, -a);
    double interference = 0.0;
    for (int k = 1; k < u; ++k) {
      const double x = radius * std::sqrt(rng.Uniform());
      interference += fading(rng) * std::pow(x, -a);
    }
    if (signal > tau * (interference + noise)) ++successes;
  }
  McEstimate out;
  out.trials = trials;
  const double p = static_cast<double>(successes) / static_cast<double>(trials);
  out.estimate = p;
  out.standard_error = std::sqrt(p * (1.0 - p) / static_cast<double>(trials));
  return out;
}

namespace channel_internal {

inline double RateFromSuccess(int u, Scheme scheme, double p_first,
                              double p_u, double tau) {
  const double bits = std::log1p(tau);
  return scheme == Scheme::kOrthogonal ? p_first * bits / u : p_u * bits;
}

// floor(L * rate / mu), saturating at INT_MAX.
inline int BudgetFromRate(double rate, const SystemConfig& cfg) {
  const double packets =
      std::floor(cfg.packets_per_content() * rate / cfg.departure_rate());
  if (packets >= static_cast<double>(std::numeric_limits<int>::max())) {
    return std::numeric_limits<int>::max();
  }
  return packets <= 0.0 ? 0 : static_cast<int>(packets);
}

}  // namespace channel_internal

// R(u) in nats per unit time: P[.|1] log(1+tau) / u for orthogonal access,
// P[.|u] log(1+tau) for non-orthogonal access.
inline double Rate(int u, const SystemConfig& cfg) {
  if (u < 1) throw std::domain_error("rate: u must be >= 1");
  const SuccessIntegrator success(cfg);
  const double p_first = success(1);
  const double p_u = cfg.scheme() == Scheme::kOrthogonal ? p_first : success(u);
  return channel_internal::RateFromSuccess(u, cfg.scheme(), p_first, p_u,
                                           cfg.sinr_threshold());
}

// B(u) = floor(L R(u) / mu).
inline int PacketBudget(int u, const SystemConfig& cfg) {
  return channel_internal::BudgetFromRate(Rate(u, cfg), cfg);
}

// Memoized P[rho > tau | u], R(u) and B(u) for u = 1..u_max.
class LinkBudget {
 public:
  Scheme scheme() const { return scheme_; }
  int u_max() const { return static_cast<int>(p_succ_.size()); }

  double p_succ(int u) const { return p_succ_.at(Index(u)); }
  double rate(int u) const { return rate_.at(Index(u)); }
  int budget(int u) const { return budget_.at(Index(u)); }

  const std::vector<double>& p_succ_table() const { return p_succ_; }
  const std::vector<double>& rate_table() const { return rate_; }
  const std::vector<int>& budget_table() const { return budget_; }

 private:
  friend LinkBudget BuildLinkBudget(const SystemConfig& cfg, int u_max);

  std::size_t Index(int u) const {
    if (u < 1 || u > u_max()) {
      throw std::domain_error("link budget: u outside [1, u_max]");
    }
    return static_cast<std::size_t>(u - 1);
  }

  Scheme scheme_ = Scheme::kOrthogonal;
  std::vector<double> p_succ_;
  std::vector<double> rate_;
  std::vector<int> budget_;
};

inline LinkBudget BuildLinkBudget(const SystemConfig& cfg, int u_max) {
  if (u_max < 1) throw std::domain_error("link budget: u_max must be >= 1");
  const SuccessIntegrator success(cfg);
  LinkBudget lb;
  lb.scheme_ = cfg.scheme();
  lb.p_succ_.resize(u_max);
  lb.rate_.resize(u_max);
  lb.budget_.resize(u_max);
  for (int u = 1; u <= u_max; ++u) lb.p_succ_[u - 1] = success(u);
  for (int u = 1; u <= u_max; ++u) {
    lb.rate_[u - 1] = channel_internal::RateFromSuccess(
        u, cfg.scheme(), lb.p_succ_[0], lb.p_succ_[u - 1],
        cfg.sinr_threshold());
    lb.budget_[u - 1] = channel_internal::BudgetFromRate(lb.rate_[u - 1], cfg);
  }
  return lb;
}

// Budget table covering the Poisson truncation point of the configuration.
inline LinkBudget BuildLinkBudget(const SystemConfig& cfg) {
  return BuildLinkBudget(cfg, std::max(1, PoissonTruncation(cfg)));
}

}  // namespace mobcache

#endif  // MOBCACHE_CHANNEL_H_
