#include "spinrep/transforms.hpp"

#include <cmath>

#include "spinrep/grassmann.hpp"
#include "spinrep/random.hpp"

namespace spinrep {

double LinearMap4::isometry_defect(const Metric& g) const {
  return (a_.transpose() * g.matrix() * a_ - g.matrix()).cwiseAbs().maxCoeff();
}

bool LinearMap4::is_isometry(const Metric& g, double tol) const { return isometry_defect(g) < tol; }

int ConjugationSpectrum::null_dimension(double null_tol) const {
  return static_cast<int>((singular_values.array() < null_tol).count());
}

namespace transforms {
namespace {

using ConjugationSystem = Eigen::Matrix<Complex, kDim * kBlades, kBlades>;

ConjugationSystem conjugation_system(const GammaBasis& from, const GammaBasis& to) {
  ConjugationSystem k;
  for (int col = 0; col < kBlades; ++col) {
    MatrixElem e = MatrixElem::Zero();
    e(col % kDim, col / kDim) = 1.0;  // column-major unit matrix
    for (int mu = 0; mu < kDim; ++mu) {
      const MatrixElem r = e * from.gamma(mu) - to.gamma(mu) * e;
      k.block<kBlades, 1>(mu * kBlades, col) =
          Eigen::Map<const Eigen::Matrix<Complex, kBlades, 1>>(r.data());
    }
  }
  return k;
}

double conjugation_defect(const MatrixElem& s, const MatrixElem& s_inv, const GammaBasis& from,
                          const GammaBasis& to) {
  double worst = 0;
  for (int mu = 0; mu < kDim; ++mu) {
    worst = std::max(worst, max_abs(s * from.gamma(mu) * s_inv - to.gamma(mu)));
  }
  return worst;
}

}  // namespace

Metric metric_pullback(const LinearMap4& a, const Metric& g) {
  const Mat4r p = a.matrix().transpose() * g.matrix() * a.matrix();
  return Metric(0.5 * (p + p.transpose()), g.degeneracy_tol());
}

GammaBasis substitute_gammas(const LinearMap4& a, const GammaBasis& basis) {
  std::array<MatrixElem, kDim> out;
  for (int mu = 0; mu < kDim; ++mu) {
    out[mu] = MatrixElem::Zero();
    for (int nu = 0; nu < kDim; ++nu) out[mu] += a.matrix()(nu, mu) * basis.gamma(nu);
  }
  return GammaBasis(out, metric_pullback(a, basis.metric()));
}

ConjugationSpectrum conjugation_spectrum(const LinearMap4& a, const GammaBasis& basis) {
  const GammaBasis target = substitute_gammas(a, basis);
  Eigen::JacobiSVD<ConjugationSystem> svd(conjugation_system(basis, target));
  ConjugationSpectrum out;
  const auto& s = svd.singularValues();
  const double top = s[0] > 0 ? s[0] : 1.0;
  for (int i = 0; i < kBlades; ++i) out.singular_values[i] = s[i] / top;
  return out;
}

SpinElement spin_lift(const LinearMap4& a, const Metric& g, const GammaBasis& basis,
                      const LiftOptions& opts) {
  const double defect = a.isometry_defect(g);
  if (!(defect < opts.isometry_tol)) {
    throw NotIsometry("A is not an isometry of g: ||A^T g A - g||_max = " + std::to_string(defect));
  }
  const GammaBasis target = substitute_gammas(a, basis);
  Eigen::JacobiSVD<ConjugationSystem> svd(conjugation_system(basis, target), Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  const double top = s[0] > 0 ? s[0] : 1.0;
  const double smallest = s[kBlades - 1] / top;
  const double next = s[kBlades - 2] / top;
  if (!(smallest < opts.null_tol) || !(next > opts.gap_tol)) {
    throw LiftNotFound("conjugation system has no isolated null vector (smallest " +
                       std::to_string(smallest) + ", next " + std::to_string(next) + ")");
  }

  const Coeffs16 v = svd.matrixV().col(kBlades - 1);
  MatrixElem sigma = Eigen::Map<const MatrixElem>(v.data());

  SpinElement out;
  const Complex det = sigma.determinant();
  out.scale = std::pow(det, -0.25);
  sigma *= out.scale;

  CliffordElement coeffs = basis.decompose(sigma);
  // Sign branch: rotate by a power of i so the first largest-magnitude
  // coefficient has argument in (-π/4, π/4].
  const double peak = coeffs.max_abs();
  BladeIndex lead = 0;
  while (std::abs(coeffs[lead]) < peak * (1.0 - 1e-9)) ++lead;
  const double arg = std::arg(coeffs[lead]);
  int k = static_cast<int>(std::ceil((arg - M_PI / 4) / (M_PI / 2)));
  k = ((k % 4) + 4) % 4;
  const std::array<Complex, 4> ipow = {Complex(1, 0), Complex(0, -1), Complex(-1, 0), Complex(0, 1)};
  sigma *= ipow[k];
  coeffs *= ipow[k];
  out.scale *= ipow[k];
  out.branch = k;

  out.sigma = coeffs;
  out.matrix = sigma;
  out.inverse = sigma.inverse();
  out.even = clifford::odd_part(coeffs).max_abs() <= 1e-8 * peak;
  out.residual = conjugation_defect(out.matrix, out.inverse, basis, target);
  return out;
}

EndoOp exterior_pushforward(const LinearMap4& a) {
  EndoOp push = EndoOp::Zero();
  std::array<GrassmannElement, kDim> images;
  for (int mu = 0; mu < kDim; ++mu) {
    images[mu] = GrassmannElement::vector(a.matrix().col(mu).cast<Complex>());
  }
  for (BladeIndex b = 0; b < kBlades; ++b) {
    GrassmannElement w = GrassmannElement::scalar(1.0);
    for (int mu = 0; mu < kDim; ++mu) {
      if (b & (1u << mu)) w = grassmann::wedge(w, images[mu]);
    }
    push.col(b) = w.coeffs();
  }
  return push;
}

MatrixAction::MatrixAction(const LinearMap4& a, const GammaBasis& basis)
    : push_(exterior_pushforward(a)), basis_(basis) {}

MatrixElem MatrixAction::operator()(const MatrixElem& m) const {
  const GrassmannElement w = iso::to_grassmann(basis_.decompose(m));
  return basis_.compose(iso::to_clifford(apply_op(push_, w)));
}

MatrixAction gl4_on_matrices(const LinearMap4& a, const GammaBasis& basis) {
  return MatrixAction(a, basis);
}

PropositionReport proposition_check(const LinearMap4& a, const Metric& g, const GammaBasis& basis,
                                    int samples, std::uint64_t seed,
                                    const PropositionTolerances& tol) {
  PropositionReport rep;
  rep.samples = samples;
  rep.isometry_defect = a.isometry_defect(g);
  rep.isometry = rep.isometry_defect < tol.lift.isometry_tol;
  Rng rng(seed);

  const MatrixAction act(a, basis);

  if (rep.isometry) {
    try {
      const SpinElement s = spin_lift(a, g, basis, tol.lift);
      rep.lift_found = true;
      auto check = [&](const MatrixElem& m) {
        const MatrixElem diff = act(m) - s.matrix * m * s.inverse;
        rep.conjugation_residual =
            std::max(rep.conjugation_residual, max_abs(diff) / std::max(1.0, max_abs(m)));
      };
      for (BladeIndex b = 0; b < kBlades; ++b) check(basis.blade_matrix(b));
      for (int i = 0; i < samples; ++i) check(rng.matrix());
    } catch (const LiftNotFound&) {
      rep.lift_found = false;
    }
  } else {
    const ConjugationSpectrum spec = conjugation_spectrum(a, basis);
    rep.smallest_singular = spec.smallest();
    rep.null_space_trivial = spec.smallest() > tol.null_singular;
  }

  const MatrixAction act_inv(LinearMap4(a.matrix().inverse()), basis);
  for (int i = 0; i < samples; ++i) {
    const LinearMap4 b(sample::invertible(rng));
    const MatrixAction act_ab(a * b, basis);
    const MatrixAction act_b(b, basis);
    const MatrixElem m = rng.matrix();
    const MatrixElem lhs = act_ab(m);
    const MatrixElem rhs = act(act_b(m));
    rep.homomorphism_residual =
        std::max(rep.homomorphism_residual, max_abs(lhs - rhs) / std::max(1.0, max_abs(lhs)));
    rep.inverse_residual = std::max(rep.inverse_residual, max_abs(act(act_inv(m)) - m));
  }

  const bool group_ok = rep.homomorphism_residual < tol.residual && rep.inverse_residual < tol.residual;
  rep.pass = rep.isometry ? (rep.lift_found && rep.conjugation_residual < tol.residual && group_ok)
                          : (rep.null_space_trivial && group_ok);
  return rep;
}

SubspaceReport conjugation_subspace_check(const MatrixElem& sigma, const GammaBasis& basis) {
  SubspaceReport rep;
  const MatrixElem inv = sigma.inverse();
  for (BladeIndex b = 0; b < kBlades; ++b) {
    const CliffordElement c = basis.decompose(sigma * basis.blade_matrix(b) * inv);
    const double leak = c.off_grade_norm(grade(b)) / std::max(1e-300, c.max_abs());
    rep.leakage_by_grade[grade(b)] = std::max(rep.leakage_by_grade[grade(b)], leak);
    rep.leakage = std::max(rep.leakage, leak);
  }
  return rep;
}

SubspaceReport conjugation_subspace_check(const SpinElement& sigma, const GammaBasis& basis) {
  return conjugation_subspace_check(sigma.matrix, basis);
}

}  // namespace transforms
}  // namespace spinrep
