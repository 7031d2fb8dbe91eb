#include <doctest.h>

#include "oracles.hpp"
#include "spinrep/grassmann.hpp"
#include "spinrep/isomorphisms.hpp"
#include "spinrep/random.hpp"

using namespace spinrep;
using namespace spinrep::iso;

namespace {

CliffordElement gam(int mu) { return CliffordElement::generator(mu); }
CliffordElement one() { return CliffordElement::scalar(1.0); }
GrassmannElement d(int mu) { return GrassmannElement::generator(mu); }

double rel(double err, double scale) { return err / std::max(1.0, scale); }

}  // namespace

TEST_CASE("canonical isomorphism is the coefficientwise identity") {
  CHECK(max_abs_diff(to_clifford(GrassmannElement::scalar(1.0)), one()) == 0.0);
  CHECK(max_abs_diff(to_clifford(GrassmannElement::blade(0b0101)), CliffordElement::blade(0b0101)) == 0.0);
  const auto a = 2.0 * d(1) + GrassmannElement::blade(0b0011);
  CHECK(max_abs_diff(to_clifford(a), 2.0 * gam(1) + CliffordElement::blade(0b0011)) == 0.0);
  for (BladeIndex b = 0; b < kBlades; ++b) {
    const auto blade = GrassmannElement::blade(b);
    CHECK(max_abs_diff(to_grassmann(to_clifford(blade)), blade) == 0.0);
  }
}

TEST_CASE("left representation") {
  const Metric eta = Metric::minkowski();
  CHECK(max_abs(left_rep(one(), eta) - EndoOp::Identity()) == 0.0);
  CHECK(max_abs(right_rep(one(), eta) - EndoOp::Identity()) == 0.0);
  for (int mu = 0; mu < kDim; ++mu) {
    CHECK(max_abs(left_rep(gam(mu), eta) - grassmann::gamma_op(mu, eta)) == 0.0);
  }

  Rng rng(11);
  SUBCASE("homomorphism for every metric") {
    for (int trial = 0; trial < 50; ++trial) {
      const Metric g = sample::metric(rng);
      const clifford::CliffordAlgebra cl(g);
      const auto a = rng.clifford();
      const auto b = rng.clifford();
      const EndoOp lhs = left_rep(cl.product(a, b), g);
      const EndoOp rhs = left_rep(a, g) * left_rep(b, g);
      CHECK(rel(max_abs(lhs - rhs), max_abs(lhs)) < 1e-11);
      const EndoOp rlhs = right_rep(cl.product(a, b), g);
      const EndoOp rrhs = right_rep(b, g) * right_rep(a, g);
      CHECK(rel(max_abs(rlhs - rrhs), max_abs(rlhs)) < 1e-11);
    }
  }
  SUBCASE("intertwines left multiplication for diagonal metrics") {
    for (int trial = 0; trial < 100; ++trial) {
      const Metric g = trial < 50 ? Metric::minkowski() : sample::diagonal_metric(rng);
      const clifford::CliffordAlgebra cl(g);
      const auto l = rng.clifford();
      const auto m = rng.clifford();
      const auto lhs = to_grassmann(cl.product(l, m));
      const auto rhs = apply_op(left_rep(l, g), to_grassmann(m));
      CHECK(rel(max_abs_diff(lhs, rhs), lhs.max_abs()) < 1e-11);
    }
  }
  SUBCASE("intertwines through the symbol for non-diagonal metrics") {
    for (int trial = 0; trial < 30; ++trial) {
      const Metric g = sample::metric(rng);
      const clifford::CliffordAlgebra cl(g);
      const auto l = rng.clifford();
      const auto m = rng.clifford();
      const Coeffs16 lhs = cl.symbol_matrix() * cl.product(l, m).coeffs();
      const Coeffs16 rhs = left_rep(l, g) * (cl.symbol_matrix() * m.coeffs());
      CHECK(rel(max_abs(lhs - rhs), max_abs(lhs)) < 1e-11);
    }
  }
}

TEST_CASE("two-sided action") {
  Rng rng(12);
  const Metric eta = Metric::minkowski();
  const clifford::CliffordAlgebra cl(eta);
  for (int i = 0; i < 50; ++i) {
    const auto m = rng.clifford();
    const auto lhs = to_grassmann(cl.product(cl.product(gam(0), m), gam(1)));
    const auto rhs = apply_op(left_rep(gam(0), eta) * right_rep(gam(1), eta), to_grassmann(m));
    CHECK(rel(max_abs_diff(lhs, rhs), lhs.max_abs()) < 1e-11);
  }
  for (int i = 0; i < 100; ++i) {
    const Metric g = i % 2 ? sample::diagonal_metric(rng) : eta;
    const clifford::CliffordAlgebra alg(g);
    const auto l = rng.clifford();
    const auto m = rng.clifford();
    const auto r = rng.clifford();
    const auto lhs = to_grassmann(alg.product(alg.product(l, m), r));
    const auto rhs = apply_op(left_rep(l, g) * right_rep(r, g), to_grassmann(m));
    CHECK(rel(max_abs_diff(lhs, rhs), lhs.max_abs()) < 1e-11);
  }
}

TEST_CASE("left and right representations commute") {
  Rng rng(13);
  for (int i = 0; i < 50; ++i) {
    const Metric g = sample::metric(rng);
    const EndoOp l = left_rep(rng.clifford(), g);
    const EndoOp r = right_rep(rng.clifford(), g);
    CHECK(rel(max_abs(l * r - r * l), max_abs(l * r)) < 1e-11);
  }
}

TEST_CASE("Dirac matrices") {
  const Metric eta = Metric::minkowski();
  const GammaBasis basis = dirac_matrices(eta);
  MatrixElem g0 = MatrixElem::Zero();
  g0.diagonal() << 1, 1, -1, -1;
  CHECK(max_abs(basis.gamma(0) - g0) == 0.0);
  // γ₂ = [[0, σ_y], [−σ_y, 0]]
  CHECK(basis.gamma(2)(0, 3) == Complex(0, -1));
  CHECK(basis.gamma(2)(3, 0) == Complex(0, -1));
  CHECK(basis.anticommutator_defect() < 1e-15);
  CHECK(basis.blade_rank() == kBlades);

  Rng rng(14);
  SUBCASE("pulled-back Minkowski metrics") {
    for (int i = 0; i < 20; ++i) {
      const Mat4r a = rng.mat4r();
      const Mat4r gm = a.transpose() * eta.matrix() * a;
      const Metric g(0.5 * (gm + gm.transpose()));
      if (std::abs(g.det()) < 1e-4) continue;
      const GammaBasis b = dirac_matrices(g);
      CHECK(b.anticommutator_defect() < 1e-12 * std::max(1.0, g.matrix().cwiseAbs().maxCoeff()));
      CHECK(b.blade_rank() == kBlades);
    }
  }
  SUBCASE("mostly-plus signature") {
    const GammaBasis b = dirac_matrices(Metric::minkowski_mostly_plus());
    CHECK(b.anticommutator_defect() < 1e-14);
    const Metric g = sample::lorentzian_diagonal_metric(rng);
    const Metric flipped(-g.matrix());
    CHECK(dirac_matrices(flipped).anticommutator_defect() < 1e-13);
  }
  SUBCASE("rejected metrics") {
    CHECK_THROWS_AS(dirac_matrices(Metric(Mat4r::Zero())), DegenerateMetric);
    CHECK_THROWS_AS(dirac_matrices(Metric(Mat4r::Identity())), NoRealFactorization);
    CHECK_THROWS_AS(dirac_matrices(Metric::diagonal(Vec4r(1, 1, -1, -1))), NoRealFactorization);
  }
  SUBCASE("basis validation") {
    CHECK_THROWS_AS(GammaBasis(basis.gammas(), Metric::minkowski_mostly_plus()), std::invalid_argument);
  }
}

TEST_CASE("matrix representation is an algebra isomorphism") {
  Rng rng(15);
  const Metric eta = Metric::minkowski();
  const GammaBasis basis = dirac_matrices(eta);
  CHECK(max_abs(clifford_to_matrix(one(), basis) - MatrixElem::Identity()) == 0.0);

  for (int trial = 0; trial < 100; ++trial) {
    const Metric g = trial < 50 ? eta : sample::lorentzian_diagonal_metric(rng);
    const GammaBasis b = trial < 50 ? basis : dirac_matrices(g);
    const clifford::CliffordAlgebra cl(g);
    const auto x = rng.clifford();
    const auto y = rng.clifford();
    const MatrixElem lhs = clifford_to_matrix(cl.product(x, y), b);
    const MatrixElem rhs = clifford_to_matrix(x, b) * clifford_to_matrix(y, b);
    CHECK(rel(max_abs(lhs - rhs), max_abs(lhs)) < 1e-11);
    CHECK(rel(max_abs_diff(matrix_to_clifford(clifford_to_matrix(x, b), b), x), x.max_abs()) < 1e-12);
  }

  // Non-diagonal metric: product compatibility holds as well, since the
  // ordered-product basis is defined by the same gammas on both sides.
  for (int trial = 0; trial < 20; ++trial) {
    Vec4r stretch;
    for (int k = 0; k < kDim; ++k) stretch[k] = rng.uniform(0.5, 1.5);
    const Mat4r a = sample::isometry(rng, eta) * stretch.asDiagonal();
    const Mat4r gm = a.transpose() * eta.matrix() * a;
    const Metric g(0.5 * (gm + gm.transpose()));
    const GammaBasis b = dirac_matrices(g);
    const clifford::CliffordAlgebra cl(g);
    const auto x = rng.clifford();
    const auto y = rng.clifford();
    const MatrixElem lhs = clifford_to_matrix(cl.product(x, y), b);
    const MatrixElem rhs = clifford_to_matrix(x, b) * clifford_to_matrix(y, b);
    CHECK(rel(max_abs(lhs - rhs), max_abs(lhs)) < 1e-9);
  }
}

TEST_CASE("matrix wedge") {
  Rng rng(16);
  const GammaBasis basis = dirac_matrices(Metric::minkowski());
  const auto& gm = basis.gammas();
  CHECK(max_abs(matrix_wedge(gm[0], gm[0], basis)) < 1e-14);
  CHECK(max_abs(matrix_wedge(gm[0], gm[1], basis) - gm[0] * gm[1]) < 1e-14);
  CHECK(max_abs(matrix_wedge(gm[1], gm[0], basis) + gm[0] * gm[1]) < 1e-14);
  for (int i = 0; i < 20; ++i) {
    const MatrixElem m = rng.matrix();
    CHECK(max_abs(matrix_wedge(MatrixElem::Identity(), m, basis) - m) < 1e-12);
    CHECK(max_abs(matrix_wedge(m, MatrixElem::Identity(), basis) - m) < 1e-12);
  }
  for (int i = 0; i < 100; ++i) {
    const MatrixElem a = rng.matrix();
    const MatrixElem b = rng.matrix();
    const MatrixElem c = rng.matrix();
    const MatrixElem lhs = matrix_wedge(matrix_wedge(a, b, basis), c, basis);
    const MatrixElem rhs = matrix_wedge(a, matrix_wedge(b, c, basis), basis);
    CHECK(rel(max_abs(lhs - rhs), max_abs(lhs)) < 1e-11);

    // Odd-grade images anticommute.
    const auto oa = clifford_to_matrix(clifford::grade_project(rng.clifford(), 1), basis);
    const auto ob = clifford_to_matrix(clifford::grade_project(rng.clifford(), 3), basis);
    const MatrixElem ab = matrix_wedge(oa, ob, basis);
    const MatrixElem ba = matrix_wedge(ob, oa, basis);
    CHECK(rel(max_abs(ab + ba), max_abs(ab)) < 1e-11);
  }
}

TEST_CASE("left representation closes the triangle with the matrix representation") {
  Rng rng(17);
  const Metric eta = Metric::minkowski();
  const GammaBasis basis = dirac_matrices(eta);
  for (int i = 0; i < 50; ++i) {
    const auto l = rng.clifford();
    const auto m = rng.clifford();
    const MatrixElem via_rep =
        clifford_to_matrix(to_clifford(apply_op(left_rep(l, eta), to_grassmann(m))), basis);
    const MatrixElem direct = clifford_to_matrix(l, basis) * clifford_to_matrix(m, basis);
    CHECK(rel(max_abs(via_rep - direct), max_abs(direct)) < 1e-11);
  }
}
