#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "spinrep/common.hpp"

namespace spinrep::cli {

enum ExitCode : int { kPass = 0, kCheckFailure = 1, kConfigError = 2 };

struct RunConfig {
  std::string metric_spec = "minkowski+---";
  std::uint64_t seed = 42;
  double tol = 1e-10;
  int samples = 50;
  bool json = false;
  std::vector<std::string> suites;
};

// Preset name, 16 comma-separated reals (row-major), or a path to a JSON
// file holding {"matrix": [[...], [...], [...], [...]]}. Throws ConfigError.
Mat4r parse_matrix(const std::string& spec);

// The metric behind a --metric value, with presets resolved. Throws
// ConfigError for malformed, asymmetric or degenerate input.
Metric parse_metric(const std::string& spec);

// Entry point shared by the executable and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace spinrep::cli
