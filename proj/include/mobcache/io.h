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

#ifndef MOBCACHE_IO_H_
#define MOBCACHE_IO_H_

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "mobcache/errors.h"
#include "mobcache/model.h"

namespace mobcache {

// A config-file problem with its location: "<source>:<line>: field 'X': ...".
// Line 0 means the field was never set and its default is invalid in
// combination with the others.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(const std::string& source, int line, std::string field,
              const std::string& what)
      : std::runtime_error(Format(source, line, field, what)),
        line_(line),
        field_(std::move(field)) {}

  int line() const { return line_; }
  const std::string& field() const { return field_; }

 private:
  static std::string Format(const std::string& source, int line,
                            const std::string& field, const std::string& what) {
    std::string out = source;
    if (line > 0) out += ":" + std::to_string(line);
    out += ": ";
    if (!field.empty()) out += "field '" + field + "': ";
    return out + what;
  }

  int line_;
  std::string field_;
};

inline std::string FormatDouble(double x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", digits, x);
  return buf;
}

namespace io_internal {

inline std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

inline std::optional<double> ToDouble(std::string_view s) {
  s = Trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double x = 0.0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
  if (s.empty() || ec != std::errc() || end != s.data() + s.size()) {
    return std::nullopt;
  }
  return x;
}

template <typename Int>
std::optional<Int> ToInt(std::string_view s) {
  s = Trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  Int x = 0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
  if (s.empty() || ec != std::errc() || end != s.data() + s.size()) {
    return std::nullopt;
  }
  return x;
}

inline std::vector<std::string_view> Split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  while (true) {
    const auto pos = s.find(sep);
    out.push_back(Trim(s.substr(0, pos)));
    if (pos == std::string_view::npos) break;
    s.remove_prefix(pos + 1);
  }
  return out;
}

}  // namespace io_internal

// Comma-separated reals. Also accepts "start:step:stop" (inclusive).
inline std::vector<double> ParseRealList(std::string_view text) {
  using io_internal::ToDouble;
  const auto colon = io_internal::Split(text, ':');
  if (colon.size() == 3) {
    const auto start = ToDouble(colon[0]);
    const auto step = ToDouble(colon[1]);
    const auto stop = ToDouble(colon[2]);
    if (!start || !step || !stop || !(*step > 0.0) || *stop < *start) {
      throw std::invalid_argument("bad range '" + std::string(text) +
                                  "': want start:step:stop with step > 0");
    }
    std::vector<double> out;
    // Integer stepping avoids accumulating rounding error.
    const auto count =
        static_cast<long long>(std::floor((*stop - *start) / *step + 1e-9));
    for (long long k = 0; k <= count; ++k) out.push_back(*start + k * *step);
    return out;
  }
  std::vector<double> out;
  for (std::string_view item : io_internal::Split(text, ',')) {
    const auto x = ToDouble(item);
    if (!x) {
      throw std::invalid_argument("'" + std::string(item) +
                                  "' is not a number");
    }
    out.push_back(*x);
  }
  return out;
}

inline std::vector<int> ParseIntList(std::string_view text) {
  std::vector<int> out;
  for (std::string_view item : io_internal::Split(text, ',')) {
    const auto x = io_internal::ToInt<int>(item);
    if (!x) {
      throw std::invalid_argument("'" + std::string(item) +
                                  "' is not an integer");
    }
    out.push_back(*x);
  }
  return out;
}

// A config file resolved into a validated configuration plus the neighbor
// cache model. Without `neighbor_pmf` every content is cached uniformly.
struct RunConfig {
  SystemConfig system;
  std::optional<std::vector<double>> neighbor_pmf;

  NeighborCacheDistribution Distribution() const {
    if (neighbor_pmf) {
      auto dist = NeighborCacheDistribution::Identical(system.content_count(),
                                                       *neighbor_pmf);
      dist.CheckCompatible(system);
      return dist;
    }
    return NeighborCacheDistribution::Uniform(system);
  }
};

// Parses flat key=value lines; '#' starts a comment. Keys mirror the
// configuration fields: F gamma L M eta lambda mu tau|tau_db radius alpha
// snr|snr_db scheme n_trunc_epsilon quad_nodes neighbor_pmf. Unknown or
// repeated keys are errors.
inline RunConfig ParseConfig(std::istream& in, const std::string& source) {
  using io_internal::ToDouble;
  using io_internal::ToInt;
  ModelParams p;
  std::optional<std::vector<double>> pmf;
  std::map<std::string, int, std::less<>> seen;  // key -> line
  std::map<std::string, int, std::less<>> field_line;

  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (line_no == 1 && line.starts_with("\xEF\xBB\xBF")) line.remove_prefix(3);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = io_internal::Trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError(source, line_no, "", "expected key = value");
    }
    const std::string key(io_internal::Trim(line.substr(0, eq)));
    const std::string_view value = io_internal::Trim(line.substr(eq + 1));
    auto fail = [&](const std::string& field, const std::string& why) {
      return ConfigError(source, line_no, field, why);
    };
    if (key.empty()) throw fail("", "missing key");

    // Both spellings of one field count as the same field.
    std::string field = key;
    if (key == "tau_db") field = "tau";
    if (key == "snr_db") field = "snr";
    if (auto it = seen.find(field); it != seen.end()) {
      throw fail(field, "already set on line " + std::to_string(it->second));
    }

    auto real = [&]() {
      const auto x = ToDouble(value);
      if (!x) throw fail(field, "'" + std::string(value) + "' is not a number");
      return *x;
    };
    auto integer = [&]() {
      const auto x = ToInt<int>(value);
      if (!x) {
        throw fail(field, "'" + std::string(value) + "' is not an integer");
      }
      return *x;
    };

    if (key == "F") {
      p.content_count = integer();
    } else if (key == "gamma") {
      p.zipf_exponent = real();
    } else if (key == "L") {
      p.packets_per_content = integer();
    } else if (key == "M") {
      p.memory_packets = integer();
    } else if (key == "eta") {
      p.energy_probability = real();
    } else if (key == "lambda") {
      p.arrival_rate = real();
    } else if (key == "mu") {
      p.departure_rate = real();
    } else if (key == "tau") {
      p.sinr_threshold = real();
    } else if (key == "tau_db") {
      p.sinr_threshold = DbToLinear(real());
    } else if (key == "radius") {
      p.radius = real();
    } else if (key == "alpha") {
      p.path_loss_exponent = real();
    } else if (key == "snr") {
      p.snr = real();
    } else if (key == "snr_db") {
      p.snr = DbToLinear(real());
    } else if (key == "scheme") {
      const auto scheme = ParseScheme(value);
      if (!scheme) {
        throw fail(field, "'" + std::string(value) +
                              "' is not orthogonal or non_orthogonal");
      }
      p.scheme = *scheme;
    } else if (key == "n_trunc_epsilon") {
      p.truncation_epsilon = real();
    } else if (key == "quad_nodes") {
      p.quadrature_nodes = integer();
    } else if (key == "neighbor_pmf") {
      try {
        pmf = ParseRealList(value);
      } catch (const std::invalid_argument& e) {
        throw fail(field, e.what());
      }
    } else {
      throw fail(key, "unknown key");
    }
    seen.emplace(field, line_no);
  }

  RunConfig out;
  try {
    out.system = SystemConfig(p);
  } catch (const InvalidConfig& e) {
    const auto it = seen.find(e.field());
    const int line = it == seen.end() ? 0 : it->second;
    const std::string what = e.what();
    // Strip the "field 'X': " prefix; ConfigError adds its own.
    const std::string prefix = "field '" + e.field() + "': ";
    throw ConfigError(source, line, e.field(),
                      what.starts_with(prefix) ? what.substr(prefix.size())
                                               : what);
  }
  if (pmf) {
    const int line = seen.at("neighbor_pmf");
    try {
      out.neighbor_pmf = pmf;
      out.Distribution();
    } catch (const std::domain_error& e) {
      throw ConfigError(source, line, "neighbor_pmf", e.what());
    }
  }
  return out;
}

inline RunConfig ParseConfigString(const std::string& text,
                                   const std::string& source = "<string>") {
  std::istringstream in(text);
  return ParseConfig(in, source);
}

// Writes a config that ParseConfig reads back to the identical values.
// Linear tau and snr are written at 17 significant digits with their dB
// value as a comment.
inline void WriteConfig(std::ostream& out, const RunConfig& config) {
  const ModelParams& p = config.system.params();
  auto real = [](double x) { return FormatDouble(x, 17); };
  out << "F = " << p.content_count << "\n";
  out << "gamma = " << real(p.zipf_exponent) << "\n";
  out << "L = " << p.packets_per_content << "\n";
  out << "M = " << p.memory_packets << "\n";
  out << "eta = " << real(p.energy_probability) << "\n";
  out << "lambda = " << real(p.arrival_rate) << "\n";
  out << "mu = " << real(p.departure_rate) << "\n";
  out << "tau = " << real(p.sinr_threshold) << "  # "
      << FormatDouble(LinearToDb(p.sinr_threshold), 12) << " dB\n";
  out << "radius = " << real(p.radius) << "\n";
  out << "alpha = " << real(p.path_loss_exponent) << "\n";
  out << "snr = " << real(p.snr) << "  # "
      << FormatDouble(LinearToDb(p.snr), 12) << " dB\n";
  out << "scheme = " << SchemeName(p.scheme) << "\n";
  out << "n_trunc_epsilon = " << real(p.truncation_epsilon) << "\n";
  out << "quad_nodes = " << p.quadrature_nodes << "\n";
  if (config.neighbor_pmf) {
    out << "neighbor_pmf = ";
    for (std::size_t k = 0; k < config.neighbor_pmf->size(); ++k) {
      out << (k ? "," : "") << real((*config.neighbor_pmf)[k]);
    }
    out << "\n";
  }
}

// ---------------------------------------------------------------------------
// Sweeps and CSV output.

enum class Axis { kSnrDb, kMu, kLambda };
enum class Method { kGreedy, kExhaustive, kHighMobility, kMonteCarlo };

inline std::string_view AxisName(Axis axis) {
  switch (axis) {
    case Axis::kSnrDb:
      return "snr_db";
    case Axis::kMu:
      return "mu";
    case Axis::kLambda:
      return "lambda";
  }
  return "?";
}

inline std::optional<Axis> ParseAxis(std::string_view name) {
  for (Axis a : {Axis::kSnrDb, Axis::kMu, Axis::kLambda}) {
    if (name == AxisName(a)) return a;
  }
  return std::nullopt;
}

inline std::string_view MethodName(Method method) {
  switch (method) {
    case Method::kGreedy:
      return "greedy";
    case Method::kExhaustive:
      return "exhaustive";
    case Method::kHighMobility:
      return "high_mobility";
    case Method::kMonteCarlo:
      return "monte_carlo";
  }
  return "?";
}

inline std::optional<Method> ParseMethod(std::string_view name) {
  for (Method m : {Method::kGreedy, Method::kExhaustive, Method::kHighMobility,
                   Method::kMonteCarlo}) {
    if (name == MethodName(m)) return m;
  }
  return std::nullopt;
}

struct SweepSpec {
  Axis axis = Axis::kSnrDb;
  std::vector<double> values;
  std::vector<Method> methods;
  std::vector<Scheme> schemes;

  void Validate() const {
    if (values.empty()) throw std::invalid_argument("sweep: no values");
    for (std::size_t k = 0; k < values.size(); ++k) {
      if (!std::isfinite(values[k])) {
        throw std::invalid_argument("sweep: values must be finite");
      }
      if (k > 0 && !(values[k] > values[k - 1])) {
        throw std::invalid_argument("sweep: values must be strictly increasing");
      }
    }
    if (methods.empty()) throw std::invalid_argument("sweep: no methods");
    if (schemes.empty()) throw std::invalid_argument("sweep: no schemes");
  }
};

// Methods in canonical order, duplicates removed.
inline std::vector<Method> ParseMethods(std::string_view text) {
  std::vector<bool> want(4, false);
  for (std::string_view item : io_internal::Split(text, ',')) {
    const auto m = ParseMethod(item);
    if (!m) throw std::invalid_argument("unknown method '" + std::string(item) + "'");
    want[static_cast<int>(*m)] = true;
  }
  std::vector<Method> out;
  for (int k = 0; k < 4; ++k) {
    if (want[k]) out.push_back(static_cast<Method>(k));
  }
  return out;
}

// "both", or a comma list of scheme names; orthogonal always comes first.
inline std::vector<Scheme> ParseSchemes(std::string_view text) {
  bool oma = false;
  bool noma = false;
  for (std::string_view item : io_internal::Split(text, ',')) {
    if (item == "both") {
      oma = noma = true;
      continue;
    }
    const auto s = ParseScheme(item);
    if (!s) throw std::invalid_argument("unknown scheme '" + std::string(item) + "'");
    (*s == Scheme::kOrthogonal ? oma : noma) = true;
  }
  std::vector<Scheme> out;
  if (oma) out.push_back(Scheme::kOrthogonal);
  if (noma) out.push_back(Scheme::kNonOrthogonal);
  return out;
}

// The parameters with one axis moved to `value`.
inline ModelParams ApplyAxis(ModelParams p, Axis axis, double value) {
  switch (axis) {
    case Axis::kSnrDb:
      p.snr = DbToLinear(value);
      break;
    case Axis::kMu:
      p.departure_rate = value;
      break;
    case Axis::kLambda:
      p.arrival_rate = value;
      break;
  }
  return p;
}

inline constexpr std::string_view kCsvHeader =
    "axis,value,scheme,method,load,load_normalized,trunc_bound,seed";

struct CsvRow {
  std::string axis;
  double value = 0.0;
  std::string scheme;
  std::string method;
  double load = 0.0;
  double load_normalized = 0.0;
  double trunc_bound = 0.0;
  std::uint64_t seed = 0;
};

inline std::string FormatCsvRow(const CsvRow& row) {
  return row.axis + "," + FormatDouble(row.value, 12) + "," + row.scheme +
         "," + row.method + "," + FormatDouble(row.load, 12) + "," +
         FormatDouble(row.load_normalized, 12) + "," +
         FormatDouble(row.trunc_bound, 12) + "," + std::to_string(row.seed);
}

inline void WriteCsv(std::ostream& out, const std::vector<CsvRow>& rows) {
  out << kCsvHeader << "\n";
  for (const CsvRow& row : rows) out << FormatCsvRow(row) << "\n";
}

}  // namespace mobcache

#endif  // MOBCACHE_IO_H_
