#pragma once

#include <cstdint>
#include <vector>

#include "spinrep/isomorphisms.hpp"

namespace spinrep {

/// A real 4×4 matrix acting on generators by columns: d_μ ↦ Σ_ν A_νμ d_ν,
/// γ_μ ↦ Σ_ν A_νμ γ_ν. With this convention the pulled-back metric is AᵀgA
/// and composition is ordinary matrix multiplication.
class LinearMap4 {
 public:
  static constexpr double kDefaultIsometryTol = 1e-10;

  LinearMap4() : a_(Mat4r::Identity()) {}
  explicit LinearMap4(const Mat4r& a) : a_(a) {}

  const Mat4r& matrix() const { return a_; }
  double det() const { return a_.determinant(); }

  /// ‖AᵀgA − g‖_max.
  double isometry_defect(const Metric& g) const;
  bool is_isometry(const Metric& g, double tol = kDefaultIsometryTol) const;

  friend LinearMap4 operator*(const LinearMap4& a, const LinearMap4& b) {
    return LinearMap4(a.a_ * b.a_);
  }

 private:
  Mat4r a_;
};

/// Σ with Σ γ_μ Σ⁻¹ = Σ_ν A_νμ γ_ν.
struct SpinElement {
  CliffordElement sigma;   // γ_I coefficients
  MatrixElem matrix;       // Σ as a 4×4 matrix, det = 1
  MatrixElem inverse;
  Complex scale;           // factor applied to the raw null vector
  int branch = 0;          // Σ was multiplied by (-i)^branch to fix the sign branch
  bool even = true;        // false for lifts of det A = -1 maps (P, T)
  double residual = 0.0;   // max_μ ‖Σγ_μΣ⁻¹ − γ'_μ‖_max
};

struct LiftOptions {
  double isometry_tol = LinearMap4::kDefaultIsometryTol;
  double null_tol = 1e-8;   // smallest normalised singular value must be below
  double gap_tol = 1e-4;    // next one must be above
};

/// Singular values (descending, divided by the largest) of the linear map
/// Σ ↦ (Σγ_μ − γ'_μΣ)_{μ=0..3} on Mat(4, ℂ).
struct ConjugationSpectrum {
  Eigen::Matrix<double, kBlades, 1> singular_values;
  double smallest() const { return singular_values[kBlades - 1]; }
  double second_smallest() const { return singular_values[kBlades - 2]; }
  int null_dimension(double null_tol) const;
};

namespace transforms {

/// γ'_μ = Σ_ν A_νμ γ_ν, representing the metric AᵀgA.
GammaBasis substitute_gammas(const LinearMap4& a, const GammaBasis& basis);

Metric metric_pullback(const LinearMap4& a, const Metric& g);

ConjugationSpectrum conjugation_spectrum(const LinearMap4& a, const GammaBasis& basis);

/// Throws NotIsometry or LiftNotFound.
SpinElement spin_lift(const LinearMap4& a, const Metric& g, const GammaBasis& basis,
                      const LiftOptions& opts = {});

/// Block-diagonal extension of A to Λ₄; the Λᵏ block is the k-th exterior power.
EndoOp exterior_pushforward(const LinearMap4& a);

/// The GL(4,ℝ) action on Mat(4, ℂ) obtained by transporting the exterior
/// pushforward through Λ_C and the matrix representation.
class MatrixAction {
 public:
  MatrixAction(const LinearMap4& a, const GammaBasis& basis);

  MatrixElem operator()(const MatrixElem& m) const;
  const EndoOp& pushforward() const { return push_; }

 private:
  EndoOp push_;
  GammaBasis basis_;
};

MatrixAction gl4_on_matrices(const LinearMap4& a, const GammaBasis& basis);

struct PropositionReport {
  bool isometry = false;
  double isometry_defect = 0.0;
  // Isometry branch: max over the 16 blades and the sampled matrices of
  // ‖action(A)(M) − Σ M Σ⁻¹‖_max.
  double conjugation_residual = 0.0;
  bool lift_found = false;
  // Non-isometry branch: the conjugation system has trivial null space.
  double smallest_singular = 0.0;
  bool null_space_trivial = false;
  // Both branches: action(A·B) vs action(A)∘action(B) over sampled B, and
  // action(A)∘action(A⁻¹) vs identity.
  double homomorphism_residual = 0.0;
  double inverse_residual = 0.0;
  int samples = 0;
  bool pass = false;
};

struct PropositionTolerances {
  double residual = 1e-10;
  double null_singular = 1e-6;
  LiftOptions lift;
};

PropositionReport proposition_check(const LinearMap4& a, const Metric& g, const GammaBasis& basis,
                                    int samples, std::uint64_t seed,
                                    const PropositionTolerances& tol = {});

struct SubspaceReport {
  // Largest off-grade coefficient of Σ γ_I Σ⁻¹ relative to its norm, over all I.
  double leakage = 0.0;
  std::array<double, 5> leakage_by_grade{};
};

SubspaceReport conjugation_subspace_check(const SpinElement& sigma, const GammaBasis& basis);
/// Same check for an arbitrary invertible matrix Σ.
SubspaceReport conjugation_subspace_check(const MatrixElem& sigma, const GammaBasis& basis);

}  // namespace transforms
}  // namespace spinrep
