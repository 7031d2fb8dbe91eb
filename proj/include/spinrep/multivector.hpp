#pragma once

#include <algorithm>

#include "spinrep/common.hpp"

namespace spinrep {

// Dense 16-coefficient element indexed by BladeIndex. The tag keeps
// Grassmann and Clifford elements apart: they share a layout but not a
// product, and the only sanctioned bridge is the canonical isomorphism.
template <class Tag>
class BladeVector {
 public:
  BladeVector() : c_(Coeffs16::Zero()) {}
  explicit BladeVector(const Coeffs16& c) : c_(c) {}

  static BladeVector scalar(Complex s) {
    BladeVector r;
    r.c_[0] = s;
    return r;
  }
  static BladeVector blade(BladeIndex b, Complex s = 1.0) {
    BladeVector r;
    r.c_[b] = s;
    return r;
  }
  static BladeVector generator(int mu, Complex s = 1.0) { return blade(1u << mu, s); }
  static BladeVector vector(const Vec4c& v) {
    BladeVector r;
    for (int mu = 0; mu < kDim; ++mu) r.c_[1u << mu] = v[mu];
    return r;
  }

  const Coeffs16& coeffs() const { return c_; }
  Coeffs16& coeffs() { return c_; }
  Complex operator[](BladeIndex b) const { return c_[b]; }
  Complex& operator[](BladeIndex b) { return c_[b]; }

  BladeVector grade_part(int k) const {
    BladeVector r;
    for (BladeIndex b = 0; b < kBlades; ++b) {
      if (grade(b) == k) r.c_[b] = c_[b];
    }
    return r;
  }

  // Largest |coefficient| outside grade k; 0 for a homogeneous element.
  double off_grade_norm(int k) const {
    double m = 0;
    for (BladeIndex b = 0; b < kBlades; ++b) {
      if (grade(b) != k) m = std::max(m, std::abs(c_[b]));
    }
    return m;
  }

  double max_abs() const { return c_.cwiseAbs().maxCoeff(); }

  BladeVector& operator+=(const BladeVector& o) { c_ += o.c_; return *this; }
  BladeVector& operator-=(const BladeVector& o) { c_ -= o.c_; return *this; }
  BladeVector& operator*=(Complex s) { c_ *= s; return *this; }

  friend BladeVector operator+(BladeVector a, const BladeVector& b) { return a += b; }
  friend BladeVector operator-(BladeVector a, const BladeVector& b) { return a -= b; }
  friend BladeVector operator-(const BladeVector& a) { return BladeVector(-a.c_); }
  friend BladeVector operator*(Complex s, BladeVector a) { return a *= s; }
  friend BladeVector operator*(BladeVector a, Complex s) { return a *= s; }

 private:
  Coeffs16 c_;
};

template <class Tag>
double max_abs_diff(const BladeVector<Tag>& a, const BladeVector<Tag>& b) {
  return (a.coeffs() - b.coeffs()).cwiseAbs().maxCoeff();
}

template <class Derived>
double max_abs(const Eigen::MatrixBase<Derived>& m) {
  return m.cwiseAbs().maxCoeff();
}

struct GrassmannTag {};
struct CliffordTag {};

using GrassmannElement = BladeVector<GrassmannTag>;
using CliffordElement = BladeVector<CliffordTag>;

// Operators act on coefficient vectors.
template <class Tag>
BladeVector<Tag> apply_op(const EndoOp& op, const BladeVector<Tag>& a) {
  return BladeVector<Tag>(op * a.coeffs());
}

}  // namespace spinrep
