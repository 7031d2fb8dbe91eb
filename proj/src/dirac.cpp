#include "spinrep/dirac.hpp"

#include <algorithm>
#include <cmath>

#include "spinrep/grassmann.hpp"

namespace spinrep::dirac {
namespace {

// The `count` right singular vectors of m with the smallest singular values.
Eigen::Matrix<Complex, kDim, Eigen::Dynamic> smallest_right_singular(const MatrixElem& m, int count) {
  Eigen::JacobiSVD<MatrixElem> svd(m, Eigen::ComputeFullV);
  return svd.matrixV().rightCols(count);
}

}  // namespace

double PlaneWave::residual(const GammaBasis& basis) const {
  return max_abs(symbol_matrix(exponent, basis) * amplitude - mass * amplitude);
}

bool PlaneWave::is_solution(const GammaBasis& basis, double tol) const { return residual(basis) < tol; }

MatrixElem symbol_matrix(const Vec4c& lambda, const GammaBasis& basis) {
  MatrixElem s = MatrixElem::Zero();
  for (int mu = 0; mu < kDim; ++mu) s += lambda[mu] * basis.gamma(mu);
  return s;
}

CliffordElement symbol_element(const Vec4c& lambda) { return CliffordElement::vector(lambda); }

SolutionSpace plane_wave_solutions(const Vec4c& lambda, Complex m, const GammaBasis& basis,
                                   double cluster_tol) {
  const MatrixElem s = symbol_matrix(lambda, basis);
  const double scale = std::max({1.0, std::abs(m), max_abs(s)});
  const double tol = cluster_tol * scale;
  SolutionSpace out;

  int dim = 0;
  if (std::abs(m) <= tol) {
    // Possibly nilpotent: count the kernel directly.
    Eigen::JacobiSVD<MatrixElem> svd(s);
    dim = static_cast<int>((svd.singularValues().array() <= tol).count());
  } else {
    Eigen::ComplexEigenSolver<MatrixElem> es(s, false);
    out.eigenvalues = es.eigenvalues();
    for (int i = 0; i < kDim; ++i) {
      if (std::abs(out.eigenvalues[i] - m) <= tol) ++dim;
    }
  }

  out.columns = dim > 0 ? smallest_right_singular(s - m * MatrixElem::Identity(), dim)
                        : Eigen::Matrix<Complex, kDim, Eigen::Dynamic>(kDim, 0);
  for (int c = 0; c < dim; ++c) {
    for (int j = 0; j < kDim; ++j) {
      MatrixElem n = MatrixElem::Zero();
      n.col(j) = out.columns.col(c);
      out.matrices.push_back(n);
    }
  }
  return out;
}

EndoOp hodge_dirac_symbol(const Vec4c& lambda, const Metric& g) {
  EndoOp op = EndoOp::Zero();
  for (int mu = 0; mu < kDim; ++mu) op += lambda[mu] * grassmann::gamma_op(mu, g);
  return op;
}

PlaneWave transform_wave(const LinearMap4& a, const PlaneWave& wave, const Metric& g,
                         const GammaBasis& basis, const LiftOptions& opts) {
  const SpinElement s = transforms::spin_lift(a, g, basis, opts);
  PlaneWave out;
  out.amplitude = s.matrix * wave.amplitude * s.inverse;
  out.exponent = a.matrix().cast<Complex>() * wave.exponent;
  out.mass = wave.mass;
  return out;
}

double covariance_residual(const LinearMap4& a, const PlaneWave& wave, const Metric& g,
                           const GammaBasis& basis, const LiftOptions& opts) {
  return transform_wave(a, wave, g, basis, opts).residual(basis);
}

MatrixElem make_product_state(const Spinor& psi, const Spinor& alpha) {
  return psi * alpha.transpose();
}

Eigen::Vector4d singular_values(const MatrixElem& m) {
  Eigen::JacobiSVD<MatrixElem> svd(m);
  return svd.singularValues();
}

Eigen::Vector4d entanglement_probe(const LinearMap4& a, const ProductState& state,
                                   const GammaBasis& basis) {
  return singular_values(transforms::gl4_on_matrices(a, basis)(materialize(state)));
}

}  // namespace spinrep::dirac
