#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "report.hpp"
#include "spinrep/transforms.hpp"

namespace spinrep::cli {

inline constexpr std::array<std::string_view, 6> kSuiteNames = {
    "clifford", "dirac", "grassmann", "iso", "proposition", "transforms"};

bool is_suite(std::string_view name);

struct SuiteContext {
  Metric metric = Metric::minkowski();
  // Dirac matrices for the metric; empty when its signature has no real
  // factorisation through Minkowski space.
  std::optional<GammaBasis> basis;
  std::string basis_error;
  std::uint64_t seed = 0;
  // Isometry tolerance, also the residual bound for the lift and
  // proposition checks.
  double tol = LinearMap4::kDefaultIsometryTol;
  // Scale of every randomised check; the counts quoted per check are for 50.
  int samples = 50;

  static SuiteContext make(const Metric& g, std::uint64_t seed, double tol, int samples);

  int count(int at_fifty) const;
  LiftOptions lift_options() const;
};

// Runs one suite. Throws std::invalid_argument for an unknown name.
std::vector<CheckRecord> run_suite(std::string_view name, const SuiteContext& ctx);

// Reason the suite cannot run under ctx, or empty.
std::string suite_unavailable(std::string_view name, const SuiteContext& ctx);

// Runs the requested suites concurrently and assembles the report ordered by
// suite name. Suites that were not requested or cannot run are listed as skipped.
Report verify(const SuiteContext& ctx, const std::vector<std::string>& requested);

}  // namespace spinrep::cli
