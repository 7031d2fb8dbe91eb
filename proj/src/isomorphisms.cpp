#include "spinrep/isomorphisms.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "spinrep/grassmann.hpp"

namespace spinrep {
namespace {

const Complex kI(0.0, 1.0);

std::array<MatrixElem, kDim> standard_dirac() {
  using M2 = Eigen::Matrix<Complex, 2, 2>;
  const std::array<M2, 3> pauli = {
      (M2() << 0, 1, 1, 0).finished(),
      (M2() << 0, -kI, kI, 0).finished(),
      (M2() << 1, 0, 0, -1).finished(),
  };
  std::array<MatrixElem, kDim> g;
  g[0] = MatrixElem::Zero();
  g[0].diagonal() << 1, 1, -1, -1;
  for (int k = 0; k < 3; ++k) {
    g[k + 1] = MatrixElem::Zero();
    g[k + 1].topRightCorner<2, 2>() = pauli[k];
    g[k + 1].bottomLeftCorner<2, 2>() = -pauli[k];
  }
  return g;
}

Eigen::Matrix<Complex, kBlades, 1> flatten(const MatrixElem& m) {
  return Eigen::Map<const Eigen::Matrix<Complex, kBlades, 1>>(m.data());
}

}  // namespace

GammaBasis::GammaBasis(const std::array<MatrixElem, kDim>& gammas, const Metric& g)
    : gammas_(gammas), g_(g) {
  const double scale = std::max(1.0, g.matrix().cwiseAbs().maxCoeff());
  if (anticommutator_defect() > kAnticommutatorTol * scale * 16) {
    throw std::invalid_argument("gamma matrices do not satisfy the anticommutator for this metric");
  }
  EndoOp flat;
  for (BladeIndex b = 0; b < kBlades; ++b) {
    MatrixElem m = MatrixElem::Identity();
    for (int mu = 0; mu < kDim; ++mu) {
      if (b & (1u << mu)) m = m * gammas_[mu];
    }
    blades_[b] = m;
    flat.col(b) = flatten(m);
  }
  flat_lu_.compute(flat);
  rank_ = static_cast<int>(flat_lu_.rank());
}

double GammaBasis::anticommutator_defect() const {
  double worst = 0;
  for (int mu = 0; mu < kDim; ++mu) {
    for (int nu = 0; nu < kDim; ++nu) {
      const MatrixElem ac = gammas_[mu] * gammas_[nu] + gammas_[nu] * gammas_[mu] -
                            2.0 * g_(mu, nu) * MatrixElem::Identity();
      worst = std::max(worst, max_abs(ac));
    }
  }
  return worst;
}

CliffordElement GammaBasis::decompose(const MatrixElem& m) const {
  if (rank_ < kBlades) throw std::domain_error("gamma blade matrices are linearly dependent");
  return CliffordElement(flat_lu_.solve(flatten(m)));
}

MatrixElem GammaBasis::compose(const CliffordElement& a) const {
  MatrixElem m = MatrixElem::Zero();
  for (BladeIndex b = 0; b < kBlades; ++b) {
    if (a[b] != 0.0) m += a[b] * blades_[b];
  }
  return m;
}

namespace iso {

CliffordElement to_clifford(const GrassmannElement& a) { return CliffordElement(a.coeffs()); }

GrassmannElement to_grassmann(const CliffordElement& a) { return GrassmannElement(a.coeffs()); }

EndoOp left_rep(const CliffordElement& l, const Metric& g) {
  return clifford::CliffordAlgebra(g).left_op(l);
}

EndoOp right_rep(const CliffordElement& r, const Metric& g) {
  return clifford::CliffordAlgebra(g).right_op(r);
}

GammaBasis dirac_matrices(const Metric& g) {
  g.require_nondegenerate();
  const auto tilde = standard_dirac();

  Eigen::SelfAdjointEigenSolver<Mat4r> es(g.matrix());
  const Vec4r ev = es.eigenvalues();
  const int positives = static_cast<int>((ev.array() > 0).count());
  if (positives != 1 && positives != 3) {
    throw NoRealFactorization("metric signature (" + std::to_string(positives) + "," +
                              std::to_string(kDim - positives) +
                              ") is not Lorentzian; only (1,3) and (3,1) are supported");
  }
  // Signature (3,1) is handled as -g of signature (1,3) with gammas iγ̃.
  const double flip = positives == 1 ? 1.0 : -1.0;
  const Complex phase = positives == 1 ? Complex(1.0) : kI;

  // g = flip · Cᵀ η C with η = diag(1,-1,-1,-1).
  Mat4r c = Mat4r::Zero();
  const Vec4r eta(1, -1, -1, -1);
  const Vec4r d = flip * g.matrix().diagonal();
  bool diagonal_fit = g.is_diagonal();
  for (int mu = 0; mu < kDim && diagonal_fit; ++mu) {
    diagonal_fit = (d[mu] > 0) == (eta[mu] > 0);
  }
  if (diagonal_fit) {
    for (int mu = 0; mu < kDim; ++mu) c(mu, mu) = std::sqrt(std::abs(d[mu]));
  } else {
    // Row a of C is √|λ| qᵀ for the eigenpair assigned to η_a: the one
    // timelike eigenvalue first, then the rest in ascending order.
    const Vec4r fev = flip * ev;
    std::array<int, kDim> order{};
    std::iota(order.begin(), order.end(), 0);
    std::stable_partition(order.begin(), order.end(), [&](int i) { return fev[i] > 0; });
    for (int a = 0; a < kDim; ++a) {
      const int i = order[a];
      Vec4r q = es.eigenvectors().col(i);
      // Deterministic eigenvector sign: largest component positive.
      Eigen::Index arg;
      q.cwiseAbs().maxCoeff(&arg);
      if (q[arg] < 0) q = -q;
      c.row(a) = std::sqrt(std::abs(fev[i])) * q.transpose();
    }
  }

  std::array<MatrixElem, kDim> gammas;
  for (int mu = 0; mu < kDim; ++mu) {
    gammas[mu] = MatrixElem::Zero();
    for (int a = 0; a < kDim; ++a) gammas[mu] += c(a, mu) * phase * tilde[a];
  }
  return GammaBasis(gammas, g);
}

MatrixElem clifford_to_matrix(const CliffordElement& a, const GammaBasis& basis) {
  return basis.compose(a);
}

CliffordElement matrix_to_clifford(const MatrixElem& m, const GammaBasis& basis) {
  return basis.decompose(m);
}

MatrixElem matrix_wedge(const MatrixElem& a, const MatrixElem& b, const GammaBasis& basis) {
  const auto wa = to_grassmann(basis.decompose(a));
  const auto wb = to_grassmann(basis.decompose(b));
  return basis.compose(to_clifford(grassmann::wedge(wa, wb)));
}

}  // namespace iso
}  // namespace spinrep
