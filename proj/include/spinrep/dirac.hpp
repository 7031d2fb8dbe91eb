#pragma once

#include <vector>

#include "spinrep/transforms.hpp"

// Matrix Dirac equation on plane waves Ψ(x) = N·exp(Σ_μ λ_μ x_μ), where the
// operator Σ_μ γ_μ ∂/∂x_μ reduces to the symbol Σ_μ λ_μ γ_μ.
namespace spinrep::dirac {

struct PlaneWave {
  MatrixElem amplitude;  // N
  Vec4c exponent;        // λ
  Complex mass;          // m

  /// ‖symbol(λ)·N − m·N‖_max for the given gammas.
  double residual(const GammaBasis& basis) const;
  bool is_solution(const GammaBasis& basis, double tol = 1e-10) const;
};

struct ProductState {
  Spinor psi;
  Spinor alpha;
};

MatrixElem symbol_matrix(const Vec4c& lambda, const GammaBasis& basis);

/// Σ_μ λ_μ γ_μ as an element of Cl(g).
CliffordElement symbol_element(const Vec4c& lambda);

struct SolutionSpace {
  /// Orthonormal columns spanning {ψ : symbol(λ)ψ = mψ}.
  Eigen::Matrix<Complex, kDim, Eigen::Dynamic> columns;
  /// ψ_c ⊗ e_j for every column c and j = 0..3; a basis of the matrix
  /// solutions N with symbol(λ)N = mN.
  std::vector<MatrixElem> matrices;
  /// Eigenvalues of the symbol (empty on the nilpotent branch).
  Vec4c eigenvalues = Vec4c::Zero();

  int column_dimension() const { return static_cast<int>(columns.cols()); }
};

inline constexpr double kEigenClusterTol = 1e-9;

/// Eigenvalues of the symbol are clustered around m (tolerance scaled by
/// max(1, |m|, ‖symbol‖)); the cluster size fixes the dimension and the
/// kernel of symbol − m supplies the vectors. When m ≈ 0 the symbol may be
/// nilpotent, so the kernel is used directly.
SolutionSpace plane_wave_solutions(const Vec4c& lambda, Complex m, const GammaBasis& basis,
                                   double cluster_tol = kEigenClusterTol);

/// Σ_μ λ_μ (δ_μ + δ*_μ) on Λ₄. Throws DegenerateMetric.
EndoOp hodge_dirac_symbol(const Vec4c& lambda, const Metric& g);

/// Transforms the wave by an isometry A: amplitude Σ_A N Σ_A⁻¹ and exponent
/// A·λ, so that Σ symbol(λ) Σ⁻¹ = symbol(A·λ). Throws NotIsometry.
PlaneWave transform_wave(const LinearMap4& a, const PlaneWave& wave, const Metric& g,
                         const GammaBasis& basis, const LiftOptions& opts = {});

/// Residual of the transformed wave as a solution of the same equation.
double covariance_residual(const LinearMap4& a, const PlaneWave& wave, const Metric& g,
                           const GammaBasis& basis, const LiftOptions& opts = {});

/// M_ij = ψ_i α_j.
MatrixElem make_product_state(const Spinor& psi, const Spinor& alpha);
inline MatrixElem materialize(const ProductState& s) { return make_product_state(s.psi, s.alpha); }

/// Singular values (descending) of gl4_on_matrices(A) applied to ψ⊗α.
Eigen::Vector4d entanglement_probe(const LinearMap4& a, const ProductState& state,
                                   const GammaBasis& basis);

Eigen::Vector4d singular_values(const MatrixElem& m);

}  // namespace spinrep::dirac
