#include "spinrep/clifford.hpp"

#include "spinrep/grassmann.hpp"

namespace spinrep::clifford {

CliffordAlgebra::CliffordAlgebra(const Metric& g) : g_(g) {
  g.require_nondegenerate();
  std::array<EndoOp, kDim> gl;
  std::array<EndoOp, kDim> gr;
  for (int mu = 0; mu < kDim; ++mu) {
    gl[mu] = grassmann::gamma_op(mu, g);
    gr[mu] = grassmann::right_gamma_op(mu, g);
  }
  for (BladeIndex b = 0; b < kBlades; ++b) {
    EndoOp l = EndoOp::Identity();
    EndoOp r = EndoOp::Identity();
    for (int mu = 0; mu < kDim; ++mu) {
      if (!(b & (1u << mu))) continue;
      l = l * gl[mu];  // γ̂_{i1}∘…∘γ̂_{ik}, first factor outermost
      r = gr[mu] * r;  // right multiplication applies the first factor first
    }
    left_[b] = l;
    right_[b] = r;
    symbol_.col(b) = l.col(0);
  }
  symbol_inv_ = symbol_.inverse();
}

EndoOp CliffordAlgebra::left_op(const CliffordElement& a) const {
  EndoOp op = EndoOp::Zero();
  for (BladeIndex b = 0; b < kBlades; ++b) {
    if (a[b] != 0.0) op += a[b] * left_[b];
  }
  return op;
}

EndoOp CliffordAlgebra::right_op(const CliffordElement& a) const {
  EndoOp op = EndoOp::Zero();
  for (BladeIndex b = 0; b < kBlades; ++b) {
    if (a[b] != 0.0) op += a[b] * right_[b];
  }
  return op;
}

CliffordElement CliffordAlgebra::product(const CliffordElement& a, const CliffordElement& b) const {
  const Coeffs16 image = left_op(a) * (symbol_ * b.coeffs());
  return CliffordElement(symbol_inv_ * image);
}

CliffordElement CliffordAlgebra::reversion(const CliffordElement& a) const {
  CliffordElement out;
  for (BladeIndex b = 0; b < kBlades; ++b) {
    if (a[b] == 0.0) continue;
    CliffordElement term = CliffordElement::scalar(a[b]);
    // Multiply factors in descending order.
    for (int mu = 0; mu < kDim; ++mu) {
      if (b & (1u << mu)) term = product(CliffordElement::generator(mu), term);
    }
    out += term;
  }
  return out;
}

CliffordElement CliffordAlgebra::inverse(const CliffordElement& a) const {
  const EndoOp l = left_op(a);
  Eigen::FullPivLU<EndoOp> lu(l);
  if (!lu.isInvertible()) throw std::domain_error("Clifford element is not invertible");
  // a·x = 1  <=>  L(a) symbol(x) = symbol(1) = e_0
  const Coeffs16 sym = lu.solve(Coeffs16::Unit(0));
  return CliffordElement(symbol_inv_ * sym);
}

CliffordElement geometric_product(const CliffordElement& a, const CliffordElement& b,
                                  const Metric& g) {
  return CliffordAlgebra(g).product(a, b);
}

CliffordElement grade_project(const CliffordElement& a, int k) {
  if (k < 0 || k > kDim) throw std::out_of_range("grade must be in 0..4");
  return a.grade_part(k);
}

CliffordElement even_part(const CliffordElement& a) {
  return a.grade_part(0) + a.grade_part(2) + a.grade_part(4);
}

CliffordElement odd_part(const CliffordElement& a) { return a.grade_part(1) + a.grade_part(3); }

CliffordElement reversion(const CliffordElement& a) {
  CliffordElement r = a;
  for (BladeIndex b = 0; b < kBlades; ++b) {
    const int k = grade(b);
    if ((k * (k - 1) / 2) % 2 == 1) r[b] = -r[b];
  }
  return r;
}

CliffordElement reversion(const CliffordElement& a, const Metric& g) {
  return CliffordAlgebra(g).reversion(a);
}

}  // namespace spinrep::clifford
