#include "spinrep/grassmann.hpp"

#include <cmath>
#include <optional>

namespace spinrep::grassmann {
namespace {

Vec4c unit(int mu) {
  Vec4c v = Vec4c::Zero();
  v[mu] = 1.0;
  return v;
}

// g(v, d_mu) for every generator.
Vec4c pair_with_generators(const Vec4c& v, const Metric& g) {
  return g.matrix().cast<Complex>().transpose() * v;
}

// Position (1-based, ascending) of generator mu inside blade b.
int position_in(BladeIndex b, int mu) { return std::popcount(b & ((1u << mu) - 1)) + 1; }

// det g[rows, cols] for equal-size index sets.
double minor(const Mat4r& g, BladeIndex rows, BladeIndex cols) {
  const int k = grade(rows);
  if (k == 0) return 1.0;
  Eigen::MatrixXd sub(k, k);
  int r = 0;
  for (int i = 0; i < kDim; ++i) {
    if (!(rows & (1u << i))) continue;
    int c = 0;
    for (int j = 0; j < kDim; ++j) {
      if (!(cols & (1u << j))) continue;
      sub(r, c++) = g(i, j);
    }
    ++r;
  }
  return sub.determinant();
}

std::array<int, 5> sign_table(const Metric& g, bool right, Orientation o) {
  std::array<std::optional<int>, 5> seen{};
  for (int mu = 0; mu < kDim; ++mu) {
    const Vec4c v = unit(mu);
    const EndoOp direct = right ? right_delta_star_op(v, g) : delta_star_op(v, g);
    for (BladeIndex b = 0; b < kBlades; ++b) {
      const auto blade = GrassmannElement::blade(b);
      const auto lhs = apply_op(direct, blade);
      const auto gen = GrassmannElement::vector(v);
      const auto rhs = right ? right_vee(blade, gen, g, o) : vee(gen, blade, g, o);
      for (BladeIndex c = 0; c < kBlades; ++c) {
        const double scale = std::max(std::abs(lhs[c]), std::abs(rhs[c]));
        if (scale < 1e-12) continue;
        const Complex ratio = lhs[c] / rhs[c];
        const int s = ratio.real() > 0 ? 1 : -1;
        if (std::abs(ratio - Complex(s)) > 1e-9) {
          throw std::logic_error("contraction and dual product differ by more than a sign");
        }
        auto& slot = seen[grade(b)];
        if (slot && *slot != s) throw std::logic_error("contraction sign is not constant on a grade");
        slot = s;
      }
    }
  }
  std::array<int, 5> out{};
  for (int k = 0; k <= kDim; ++k) out[k] = seen[k].value_or(0);
  return out;
}

}  // namespace

GrassmannElement wedge(const GrassmannElement& a, const GrassmannElement& b) {
  GrassmannElement r;
  for (BladeIndex i = 0; i < kBlades; ++i) {
    if (a[i] == 0.0) continue;
    for (BladeIndex j = 0; j < kBlades; ++j) {
      if ((i & j) || b[j] == 0.0) continue;
      r[i | j] += static_cast<double>(reorder_sign(i, j)) * a[i] * b[j];
    }
  }
  return r;
}

EndoOp delta_op(const Vec4c& v) {
  EndoOp op = EndoOp::Zero();
  for (BladeIndex b = 0; b < kBlades; ++b) {
    for (int mu = 0; mu < kDim; ++mu) {
      const BladeIndex m = 1u << mu;
      if (b & m) continue;
      op(b | m, b) += static_cast<double>(reorder_sign(m, b)) * v[mu];
    }
  }
  return op;
}

EndoOp right_delta_op(const Vec4c& v) {
  EndoOp op = EndoOp::Zero();
  for (BladeIndex b = 0; b < kBlades; ++b) {
    for (int mu = 0; mu < kDim; ++mu) {
      const BladeIndex m = 1u << mu;
      if (b & m) continue;
      op(b | m, b) += static_cast<double>(reorder_sign(b, m)) * v[mu];
    }
  }
  return op;
}

EndoOp delta_star_op(const Vec4c& v, const Metric& g) {
  g.require_nondegenerate();
  const Vec4c gv = pair_with_generators(v, g);
  EndoOp op = EndoOp::Zero();
  for (BladeIndex b = 0; b < kBlades; ++b) {
    for (int mu = 0; mu < kDim; ++mu) {
      const BladeIndex m = 1u << mu;
      if (!(b & m)) continue;
      const double s = (position_in(b, mu) % 2 == 1) ? 1.0 : -1.0;  // (-1)^(l+1)
      op(b & ~m, b) += s * gv[mu];
    }
  }
  return op;
}

EndoOp right_delta_star_op(const Vec4c& v, const Metric& g) {
  g.require_nondegenerate();
  const Vec4c gv = pair_with_generators(v, g);
  EndoOp op = EndoOp::Zero();
  for (BladeIndex b = 0; b < kBlades; ++b) {
    const int k = grade(b);
    for (int mu = 0; mu < kDim; ++mu) {
      const BladeIndex m = 1u << mu;
      if (!(b & m)) continue;
      const double s = ((k - position_in(b, mu)) % 2 == 0) ? 1.0 : -1.0;  // (-1)^(k-l)
      op(b & ~m, b) += s * gv[mu];
    }
  }
  return op;
}

GrassmannElement delta(const Vec4c& v, const GrassmannElement& a) { return apply_op(delta_op(v), a); }

GrassmannElement delta_star(const Vec4c& v, const GrassmannElement& a, const Metric& g) {
  return apply_op(delta_star_op(v, g), a);
}

GrassmannElement right_delta(const Vec4c& v, const GrassmannElement& a) {
  return apply_op(right_delta_op(v), a);
}

GrassmannElement right_delta_star(const Vec4c& v, const GrassmannElement& a, const Metric& g) {
  return apply_op(right_delta_star_op(v, g), a);
}

EndoOp gamma_op(int i, const Metric& g) {
  if (i < 0 || i >= kDim) throw std::out_of_range("generator index must be in 0..3");
  const Vec4c v = unit(i);
  return delta_op(v) + delta_star_op(v, g);
}

EndoOp right_gamma_op(int i, const Metric& g) {
  if (i < 0 || i >= kDim) throw std::out_of_range("generator index must be in 0..3");
  const Vec4c v = unit(i);
  return right_delta_op(v) + right_delta_star_op(v, g);
}

EndoOp hodge_op(const Metric& g, Orientation o) {
  g.require_nondegenerate();
  const double vol_scale = sign_of(o) / std::sqrt(std::abs(g.det()));
  EndoOp op = EndoOp::Zero();
  // ⋆d_J = Σ_I ⟨d_I, d_J⟩ · sign(I, Iᶜ) · vol_scale · d_Iᶜ over |I| = |J|.
  for (BladeIndex j = 0; j < kBlades; ++j) {
    for (BladeIndex i = 0; i < kBlades; ++i) {
      if (grade(i) != grade(j)) continue;
      const double ip = minor(g.matrix(), i, j);
      if (ip == 0.0) continue;
      const BladeIndex comp = kPseudoscalar & ~i;
      op(comp, j) += ip * reorder_sign(i, comp) * vol_scale;
    }
  }
  return op;
}

GrassmannElement hodge(const GrassmannElement& a, const Metric& g, Orientation o) {
  return apply_op(hodge_op(g, o), a);
}

GrassmannElement vee(const GrassmannElement& a, const GrassmannElement& b, const Metric& g,
                     Orientation o) {
  const EndoOp star = hodge_op(g, o);
  return apply_op(star, wedge(a, apply_op(star, b)));
}

GrassmannElement right_vee(const GrassmannElement& a, const GrassmannElement& b, const Metric& g,
                           Orientation o) {
  const EndoOp star = hodge_op(g, o);
  return apply_op(star, wedge(apply_op(star, a), b));
}

std::array<Complex, 5> double_hodge_scalars(const Metric& g, Orientation o) {
  const EndoOp star = hodge_op(g, o);
  const EndoOp twice = star * star;
  std::array<Complex, 5> out{};
  // A representative blade per grade; the caller can confirm twice is a
  // multiple of the identity on each grade.
  const std::array<BladeIndex, 5> rep = {0b0000, 0b0001, 0b0011, 0b0111, 0b1111};
  for (int k = 0; k <= kDim; ++k) out[k] = twice(rep[k], rep[k]);
  return out;
}

std::array<int, 5> contraction_sign_table(const Metric& g, Orientation o) {
  return sign_table(g, false, o);
}

std::array<int, 5> right_contraction_sign_table(const Metric& g, Orientation o) {
  return sign_table(g, true, o);
}

}  // namespace spinrep::grassmann
