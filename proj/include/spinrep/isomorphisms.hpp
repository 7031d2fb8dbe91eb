#pragma once

#include <array>

#include "spinrep/clifford.hpp"

namespace spinrep {

/// Four 4×4 complex matrices satisfying γ_μγ_ν + γ_νγ_μ = 2 g_μν Id₄, plus the
/// 16 ordered products γ_I used as a basis of Mat(4, ℂ).
class GammaBasis {
 public:
  static constexpr double kAnticommutatorTol = 1e-13;

  /// Validates the anticommutator against g (relative to the scale of g) and
  /// throws std::invalid_argument when it fails.
  GammaBasis(const std::array<MatrixElem, kDim>& gammas, const Metric& g);

  const std::array<MatrixElem, kDim>& gammas() const { return gammas_; }
  const MatrixElem& gamma(int mu) const { return gammas_[mu]; }
  const Metric& metric() const { return g_; }

  /// γ_I as a matrix.
  const MatrixElem& blade_matrix(BladeIndex b) const { return blades_[b]; }

  /// max_{μν} ‖{γ_μ, γ_ν} − 2 g_μν Id‖_max.
  double anticommutator_defect() const;

  /// Rank of the 16 flattened blade matrices (16 for a valid basis).
  int blade_rank() const { return rank_; }

  /// Coefficients of m in the γ_I basis. Throws std::domain_error when the
  /// blade matrices are not linearly independent.
  CliffordElement decompose(const MatrixElem& m) const;
  MatrixElem compose(const CliffordElement& a) const;

 private:
  std::array<MatrixElem, kDim> gammas_;
  Metric g_;
  std::array<MatrixElem, kBlades> blades_;
  Eigen::FullPivLU<EndoOp> flat_lu_;
  int rank_ = 0;
};

namespace iso {

/// Λ_C: d_{i1}∧⋯∧d_{ik} ↦ γ_{i1}⋯γ_{ik}, coefficient for coefficient.
CliffordElement to_clifford(const GrassmannElement& a);
GrassmannElement to_grassmann(const CliffordElement& a);

/// Left regular representation 𝔠_L(L) = Σ_I L_I γ̂_{i1}∘⋯∘γ̂_{ik}.
/// It is an algebra homomorphism for every nondegenerate g. The identity
/// Λ_C⁻¹(L·M) = 𝔠_L(L)(Λ_C⁻¹(M)) additionally needs g-orthogonal generators
/// (diagonal g); otherwise ordered products and wedge blades differ by metric
/// terms. Throws DegenerateMetric.
EndoOp left_rep(const CliffordElement& l, const Metric& g);

/// Right representation with Λ_C⁻¹(M·R) = 𝔠_R(R)(Λ_C⁻¹(M)) for diagonal g.
/// Commutes with every 𝔠_L image.
EndoOp right_rep(const CliffordElement& r, const Metric& g);

/// Standard Dirac representation for g = diag(1,-1,-1,-1): γ₀ = diag(1,1,-1,-1),
/// γ_k = [[0, σ_k], [-σ_k, 0]]. For any other metric of signature (1,3) the
/// gammas are γ_μ = Σ_a C_aμ γ̃_a with g = Cᵀ η C; signature (3,1) uses iγ̃.
/// Throws DegenerateMetric or NoRealFactorization.
GammaBasis dirac_matrices(const Metric& g);

MatrixElem clifford_to_matrix(const CliffordElement& a, const GammaBasis& basis);
CliffordElement matrix_to_clifford(const MatrixElem& m, const GammaBasis& basis);

/// The Grassmann product transported to matrices: decompose in the γ_I basis,
/// wedge coefficients, recompose.
MatrixElem matrix_wedge(const MatrixElem& a, const MatrixElem& b, const GammaBasis& basis);

}  // namespace iso
}  // namespace spinrep
