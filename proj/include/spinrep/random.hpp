#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "spinrep/multivector.hpp"

namespace spinrep {

// Seeded generator. Doubles are built from raw 64-bit draws so a given seed
// produces the same stream on every standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Independent stream for a named consumer; used so suites running in
  // parallel stay deterministic.
  static Rng derived(std::uint64_t seed, std::string_view label);

  double uniform(double lo, double hi);
  Complex complex(double lo = -1.0, double hi = 1.0);
  int index(int n);

  Vec4c vec4c(double lo = -1.0, double hi = 1.0);
  Mat4r mat4r(double lo = -1.0, double hi = 1.0);
  MatrixElem matrix(double lo = -1.0, double hi = 1.0);
  GrassmannElement grassmann();
  CliffordElement clifford();

 private:
  std::mt19937_64 engine_;
};

namespace sample {

/// Symmetric, entries uniform in [-2, 2], redrawn until |det g| ≥ min_abs_det.
Metric metric(Rng& rng, double min_abs_det = 1e-6);
/// Diagonal with entries of magnitude in [0.5, 2] and random signs.
Metric diagonal_metric(Rng& rng);
/// Diagonal metric of Lorentzian signature (1,3) with random magnitudes.
Metric lorentzian_diagonal_metric(Rng& rng);

/// exp(λ) with gλ antisymmetric (so AᵀgA = g), ‖λ‖₂ capped at max_generator_norm.
/// Lands in the identity component of the isometry group.
Mat4r isometry(Rng& rng, const Metric& g, double max_generator_norm = 3.0);

/// Entries in [-1, 1], |det A| ≥ 0.1 and isometry defect ≥ 1e-3.
Mat4r non_isometry(Rng& rng, const Metric& g);

/// Entries in [-1, 1], |det A| ≥ 0.1.
Mat4r invertible(Rng& rng);

}  // namespace sample

// Named Minkowski transformations.

/// Maps e_i ↦ cosθ e_i − sinθ e_j and e_j ↦ sinθ e_i + cosθ e_j; its lift is
/// cos(θ/2) − sin(θ/2) γ_iγ_j.
Mat4r rotation(int i, int j, double theta);
/// Boost of rapidity χ mixing e_0 and e_k: e_0 ↦ coshχ e_0 − sinhχ e_k; its
/// lift is cosh(χ/2) + sinh(χ/2) γ_0γ_k.
Mat4r boost(int k, double chi);
Mat4r parity();          // diag(1,-1,-1,-1)
Mat4r time_reversal();   // diag(-1,1,1,1)

}  // namespace spinrep
