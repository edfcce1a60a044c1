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

#ifndef MOBCACHE_EXPERIMENT_H_
#define MOBCACHE_EXPERIMENT_H_

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "mobcache/high_mobility.h"
#include "mobcache/io.h"
#include "mobcache/load.h"
#include "mobcache/model.h"
#include "mobcache/montecarlo.h"
#include "mobcache/optimize.h"

namespace mobcache {

// Extra facts about one CSV row that belong in the manifest, not the CSV.
struct RowDetail {
  Placement placement;
  double standard_error = 0.0;  // monte_carlo rows only
};

struct SweepResult {
  std::vector<CsvRow> rows;
  std::vector<RowDetail> details;  // parallel to rows
};

struct SweepOptions {
  std::uint64_t seed = 0;
  std::int64_t trials = 100'000;  // monte_carlo
  int threads = 0;                // 0: hardware concurrency
};

// Runs each (axis value) grid point. Rows are ordered by axis value, then
// scheme (orthogonal first), then method, whatever order points finish in.
inline SweepResult RunSweep(const RunConfig& config, const SweepSpec& spec,
                            const SweepOptions& options) {
  spec.Validate();
  if (options.trials < 1) throw std::invalid_argument("trials must be >= 1");
  const NeighborCacheDistribution dist = config.Distribution();
  // Validate every grid point up front so errors are not timing dependent.
  std::vector<SystemConfig> points;
  for (double value : spec.values) {
    try {
      points.emplace_back(
          ApplyAxis(config.system.params(), spec.axis, value));
    } catch (const InvalidConfig& e) {
      throw InvalidConfig(e.field(), std::string(e.what()) + " (at " +
                                         std::string(AxisName(spec.axis)) +
                                         "=" + FormatDouble(value, 12) + ")");
    }
  }

  struct PointOutput {
    std::vector<CsvRow> rows;
    std::vector<RowDetail> details;
    std::exception_ptr error;
  };
  std::vector<PointOutput> outputs(points.size());

  auto run_point = [&](std::size_t k) {
    PointOutput& out = outputs[k];
    try {
      for (Scheme scheme : spec.schemes) {
        const SystemConfig cfg = points[k].WithScheme(scheme);
        const int packets = cfg.packets_per_content();
        std::optional<Placement> greedy;
        auto greedy_placement = [&]() -> const Placement& {
          if (!greedy) greedy = GreedyPlacement(dist, cfg).placement;
          return *greedy;
        };
        for (Method method : spec.methods) {
          CsvRow row;
          row.axis = AxisName(spec.axis);
          row.value = spec.values[k];
          row.scheme = SchemeName(scheme);
          row.method = MethodName(method);
          row.seed = options.seed;
          RowDetail detail{Placement::Empty(cfg), 0.0};
          if (method == Method::kMonteCarlo) {
            detail.placement = greedy_placement();
            const McEstimate mc = EstimateAverageLoad(
                detail.placement, dist, cfg, options.trials, options.seed);
            row.load = mc.estimate;
            detail.standard_error = mc.standard_error;
          } else {
            switch (method) {
              case Method::kGreedy:
                detail.placement = greedy_placement();
                break;
              case Method::kExhaustive:
                detail.placement = ExhaustivePlacement(dist, cfg);
                break;
              case Method::kHighMobility:
                detail.placement =
                    HighMobilityPlacement(scheme, dist, cfg).placement;
                break;
              case Method::kMonteCarlo:
                break;
            }
            const LoadEvaluation eval =
                AverageLoadFast(detail.placement, dist, cfg);
            row.load = eval.total;
            row.trunc_bound = eval.truncation_bound;
          }
          row.load_normalized = row.load / packets;
          out.rows.push_back(std::move(row));
          out.details.push_back(std::move(detail));
        }
      }
    } catch (...) {
      out.error = std::current_exception();
    }
  };

  int threads = options.threads > 0
                    ? options.threads
                    : static_cast<int>(std::thread::hardware_concurrency());
  threads = std::clamp(threads, 1, static_cast<int>(points.size()));
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t k = next++; k < points.size(); k = next++) run_point(k);
  };
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  SweepResult result;
  for (PointOutput& out : outputs) {
    if (out.error) std::rethrow_exception(out.error);
    for (std::size_t r = 0; r < out.rows.size(); ++r) {
      result.rows.push_back(std::move(out.rows[r]));
      result.details.push_back(std::move(out.details[r]));
    }
  }
  return result;
}

}  // namespace mobcache

#endif  // MOBCACHE_EXPERIMENT_H_
