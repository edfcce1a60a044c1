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

// Command-line driver: eval, optimize, sweep and validate. Needs CLI11.

#ifndef MOBCACHE_CLI_H_
#define MOBCACHE_CLI_H_

#include <cstdint>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mobcache/errors.h"
#include "mobcache/experiment.h"
#include "mobcache/io.h"
#include "mobcache/load.h"
#include "mobcache/model.h"
#include "mobcache/validation.h"

namespace mobcache::cli {

// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kFailed = 1;      // validate: a suite failed
inline constexpr int kBadInput = 2;    // flags, config, or values
inline constexpr int kCapacity = 3;    // an oracle refused the instance

namespace cli_internal {

struct CommonFlags {
  std::string config_path;
  std::uint64_t seed = 0;
  std::string out_path;
  std::string schemes;
  std::string methods = "greedy";
  std::int64_t trials = 100'000;
  int threads = 0;
};

inline RunConfig LoadConfig(const std::string& path) {
  if (path.empty()) return RunConfig{};
  std::ifstream in(path);
  if (!in) throw ConfigError(path, 0, "", "cannot open config file");
  return ParseConfig(in, path);
}

inline std::vector<Scheme> SchemesOrDefault(const std::string& flag,
                                            const RunConfig& config) {
  if (flag.empty()) return {config.system.scheme()};
  return ParseSchemes(flag);
}

struct Manifest {
  std::string command;
  std::uint64_t seed = 0;
  std::vector<std::string> settings;  // "key: value" lines
};

inline void WriteManifest(std::ostream& out, const Manifest& manifest,
                          const RunConfig& config,
                          const std::vector<CsvRow>& rows,
                          const std::vector<RowDetail>& details) {
  out << "# mobcache " << kVersion << " run manifest\n";
  out << "# command: " << manifest.command << "\n";
  out << "# seed: " << manifest.seed << "\n";
  for (const std::string& line : manifest.settings) out << "# " << line << "\n";
  WriteConfig(out, config);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    out << "# row " << r + 1 << ": " << rows[r].axis << "="
        << FormatDouble(rows[r].value, 17) << " " << rows[r].scheme << " "
        << rows[r].method << " placement=" << ToString(details[r].placement);
    if (rows[r].method == MethodName(Method::kMonteCarlo)) {
      out << " stderr=" << FormatDouble(details[r].standard_error, 17);
    }
    out << "\n";
  }
}

// CSV to --out (plus <out>.manifest), or CSV to `out` when no path is given.
inline void Emit(const CommonFlags& flags, const Manifest& manifest,
                 const RunConfig& config, const std::vector<CsvRow>& rows,
                 const std::vector<RowDetail>& details, std::ostream& out) {
  if (flags.out_path.empty()) {
    WriteCsv(out, rows);
    return;
  }
  std::ofstream csv(flags.out_path, std::ios::binary);
  if (!csv) throw std::runtime_error("cannot write " + flags.out_path);
  WriteCsv(csv, rows);
  std::ofstream man(flags.out_path + ".manifest", std::ios::binary);
  if (!man) throw std::runtime_error("cannot write " + flags.out_path + ".manifest");
  WriteManifest(man, manifest, config, rows, details);
}

inline std::string JoinMethods(const std::vector<Method>& methods) {
  std::string s;
  for (Method m : methods) s += (s.empty() ? "" : ",") + std::string(MethodName(m));
  return s;
}

inline std::string JoinSchemes(const std::vector<Scheme>& schemes) {
  std::string s;
  for (Scheme x : schemes) s += (s.empty() ? "" : ",") + std::string(SchemeName(x));
  return s;
}

inline std::string JoinValues(const std::vector<double>& values) {
  std::string s;
  for (double v : values) s += (s.empty() ? "" : ",") + FormatDouble(v, 17);
  return s;
}

}  // namespace cli_internal

inline int Run(int argc, const char* const* argv, std::ostream& out,
               std::ostream& err) {
  using cli_internal::CommonFlags;
  CLI::App app{"Average base-station load of mobility-aware D2D caching"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  CommonFlags flags;
  std::string placement_text;
  std::string axis_text;
  std::string values_text;
  std::int64_t samples = 10'000;

  auto add_common = [&](CLI::App* cmd, bool with_out) {
    cmd->add_option("--config", flags.config_path, "key=value config file");
    cmd->add_option("--seed", flags.seed, "64-bit seed");
    if (with_out) {
      cmd->add_option("--out", flags.out_path,
                      "CSV output path; the manifest goes to <out>.manifest");
    }
  };

  CLI::App* eval = app.add_subcommand("eval", "Average load of a placement");
  add_common(eval, true);
  eval->add_option("--placement", placement_text, "c1,...,cF")->required();
  eval->add_option("--schemes", flags.schemes,
                   "orthogonal, non_orthogonal or both (default: config)");

  CLI::App* optimize =
      app.add_subcommand("optimize", "Placements at the configured point");
  add_common(optimize, true);
  optimize->add_option("--methods", flags.methods,
                       "greedy,exhaustive,high_mobility,monte_carlo");
  optimize->add_option("--schemes", flags.schemes,
                       "orthogonal, non_orthogonal or both (default: config)");
  optimize->add_option("--trials", flags.trials, "Monte Carlo trials");

  CLI::App* sweep = app.add_subcommand("sweep", "Sweep one parameter");
  add_common(sweep, true);
  sweep->add_option("--axis", axis_text, "snr_db, mu or lambda")->required();
  sweep->add_option("--values", values_text, "v1,v2,... or start:step:stop")
      ->required();
  sweep->add_option("--methods", flags.methods,
                    "greedy,exhaustive,high_mobility,monte_carlo");
  sweep->add_option("--schemes", flags.schemes,
                    "orthogonal, non_orthogonal or both (default: config)");
  sweep->add_option("--trials", flags.trials, "Monte Carlo trials");
  sweep->add_option("--threads", flags.threads, "worker threads (0: auto)");

  CLI::App* validate = app.add_subcommand("validate", "Run the oracle suites");
  add_common(validate, false);
  std::int64_t mc_trials = 1'000'000;
  validate->add_option("--trials", mc_trials, "Monte Carlo trials per point");
  validate->add_option("--samples", samples, "submodularity samples");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kBadInput;
  }

  try {
    if (*validate) {
      ValidationOptions options;
      options.seed = flags.seed;
      options.mc_trials = mc_trials;
      options.submodularity_samples = samples;
      if (mc_trials < 2 || samples < 1) {
        throw std::invalid_argument("--trials must be >= 2, --samples >= 1");
      }
      bool all = true;
      for (const SuiteResult& r : RunValidation(options)) {
        out << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail
            << "\n";
        all = all && r.passed;
      }
      return all ? kOk : kFailed;
    }

    const RunConfig config = cli_internal::LoadConfig(flags.config_path);
    cli_internal::Manifest manifest;
    manifest.seed = flags.seed;
    const double snr_db = LinearToDb(config.system.snr());

    if (*eval) {
      manifest.command = "eval";
      const std::vector<int> counts = ParseIntList(placement_text);
      const Placement placement(counts, config.system);
      const auto schemes =
          cli_internal::SchemesOrDefault(flags.schemes, config);
      manifest.settings.push_back("placement: " + ToString(placement));
      manifest.settings.push_back("schemes: " +
                                  cli_internal::JoinSchemes(schemes));
      const NeighborCacheDistribution dist = config.Distribution();
      std::vector<CsvRow> rows;
      std::vector<RowDetail> details;
      for (Scheme scheme : schemes) {
        const SystemConfig cfg = config.system.WithScheme(scheme);
        const LoadEvaluation e = AverageLoadFast(placement, dist, cfg);
        rows.push_back({std::string(AxisName(Axis::kSnrDb)), snr_db,
                        std::string(SchemeName(scheme)), "given", e.total,
                        e.total / cfg.packets_per_content(),
                        e.truncation_bound, flags.seed});
        details.push_back({placement, 0.0});
      }
      cli_internal::Emit(flags, manifest, config, rows, details, out);
      return kOk;
    }

    SweepSpec spec;
    SweepOptions options;
    options.seed = flags.seed;
    options.trials = flags.trials;
    options.threads = flags.threads;
    spec.methods = ParseMethods(flags.methods);
    spec.schemes = cli_internal::SchemesOrDefault(flags.schemes, config);
    if (*optimize) {
      manifest.command = "optimize";
      spec.axis = Axis::kSnrDb;
      spec.values = {snr_db};
    } else {
      manifest.command = "sweep";
      const auto axis = ParseAxis(axis_text);
      if (!axis) {
        throw std::invalid_argument("--axis: '" + axis_text +
                                    "' is not snr_db, mu or lambda");
      }
      spec.axis = *axis;
      spec.values = ParseRealList(values_text);
      manifest.settings.push_back("axis: " + std::string(AxisName(spec.axis)));
      manifest.settings.push_back("values: " +
                                  cli_internal::JoinValues(spec.values));
    }
    manifest.settings.push_back("methods: " +
                                cli_internal::JoinMethods(spec.methods));
    manifest.settings.push_back("schemes: " +
                                cli_internal::JoinSchemes(spec.schemes));
    manifest.settings.push_back("trials: " + std::to_string(flags.trials));
    const SweepResult result = RunSweep(config, spec, options);
    cli_internal::Emit(flags, manifest, config, result.rows, result.details,
                       out);
    return kOk;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const CapacityError& e) {
    err << e.what() << "\n";
    return kCapacity;
  } catch (const InvalidConfig& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailed;
  }
}

}  // namespace mobcache::cli

#endif  // MOBCACHE_CLI_H_
