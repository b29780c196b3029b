#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "oam/module.hpp"

namespace oam {

using Json = nlohmann::ordered_json;

inline constexpr int kReportSchemaVersion = 1;
inline constexpr const char* kToolVersion = "0.1.0";

/// Invalid configuration; the CLI maps it to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Tolerances {
  double residual = 1e-9;
  double phi = 1e-9;
  double property = 1e-8;
  std::map<std::string, double> per_property;
};

/// Validated run configuration. The map node is kept as JSON because random
/// map parameters are drawn from the run seed.
struct RunConfig {
  Json raw;
  ModuleDescriptor module;
  Json map;
  std::uint64_t seed = 0;
  std::size_t samples = 100;
  std::size_t suite_samples = 200;
  Tolerances tolerances;
  bool random_frames = false;
};

/// Throws ConfigError on any schema violation.
RunConfig parse_config(const Json& config);
ModuleDescriptor parse_module(const Json& node);

struct RunResult {
  Json report;
  /// 0 success (expected failures included), 1 unexpected invariant breach.
  int exit_code = 0;
};

/// Deterministic given the config; only "wall_clock_seconds" varies between
/// runs. Progress lines go to `log` when non-null.
RunResult run(const RunConfig& config, std::ostream* log = nullptr);

Json complex_to_json(Complex z);

}  // namespace oam
