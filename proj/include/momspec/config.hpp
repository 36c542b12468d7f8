#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "momspec/boundary.hpp"
#include "momspec/infinite.hpp"
#include "momspec/intervals.hpp"

namespace momspec {

using Json = nlohmann::json;

struct InfiniteSpec {
  InfiniteConfig config;
  std::vector<double> phases;
};

struct RunConfig {
  std::optional<IntervalConfig> intervals;
  std::optional<BoundaryMatrix> boundary;
  std::optional<BoundaryMatrix> boundary2;
  std::optional<InfiniteSpec> infinite;
  bool reunitarize = false;
  Json params = Json::object();
};

// Errors are ConfigError with a JSON pointer to the offending field.
RunConfig parse_run_config(const Json& doc);
RunConfig load_run_config(const std::string& path);

Complex parse_complex(const Json& v, const std::string& pointer);
BoundaryMatrix parse_boundary(const Json& spec, int n, bool reunitarize, const std::string& pointer);
IntervalConfig parse_intervals(const Json& spec, const std::string& pointer);

// Typed parameter lookup with default.
double param_double(const RunConfig& rc, const std::string& key, double fallback);
int param_int(const RunConfig& rc, const std::string& key, int fallback);

}  // namespace momspec
