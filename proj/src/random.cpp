#include "spinrep/random.hpp"

#include <cmath>

#include <unsupported/Eigen/MatrixFunctions>

namespace spinrep {

Rng Rng::derived(std::uint64_t seed, std::string_view label) {
  // FNV-1a over the label, folded into the seed.
  std::uint64_t h = 1469598103934665603ull;
  for (char c : label) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  return Rng(seed ^ (h + 0x9e3779b97f4a7c15ull + (seed << 6) + (seed >> 2)));
}

double Rng::uniform(double lo, double hi) {
  const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * u;
}

Complex Rng::complex(double lo, double hi) {
  const double re = uniform(lo, hi);
  const double im = uniform(lo, hi);
  return {re, im};
}

int Rng::index(int n) { return static_cast<int>(engine_() % static_cast<std::uint64_t>(n)); }

Vec4c Rng::vec4c(double lo, double hi) {
  Vec4c v;
  for (int i = 0; i < kDim; ++i) v[i] = complex(lo, hi);
  return v;
}

Mat4r Rng::mat4r(double lo, double hi) {
  Mat4r m;
  for (int i = 0; i < kDim; ++i) {
    for (int j = 0; j < kDim; ++j) m(i, j) = uniform(lo, hi);
  }
  return m;
}

MatrixElem Rng::matrix(double lo, double hi) {
  MatrixElem m;
  for (int i = 0; i < kDim; ++i) {
    for (int j = 0; j < kDim; ++j) m(i, j) = complex(lo, hi);
  }
  return m;
}

GrassmannElement Rng::grassmann() {
  GrassmannElement a;
  for (BladeIndex b = 0; b < kBlades; ++b) a[b] = complex();
  return a;
}

CliffordElement Rng::clifford() {
  CliffordElement a;
  for (BladeIndex b = 0; b < kBlades; ++b) a[b] = complex();
  return a;
}

namespace sample {

Metric metric(Rng& rng, double min_abs_det) {
  for (;;) {
    Mat4r g;
    for (int i = 0; i < kDim; ++i) {
      for (int j = i; j < kDim; ++j) g(i, j) = g(j, i) = rng.uniform(-2.0, 2.0);
    }
    if (std::abs(g.determinant()) >= min_abs_det) return Metric(g);
  }
}

Metric diagonal_metric(Rng& rng) {
  Vec4r d;
  for (int i = 0; i < kDim; ++i) {
    d[i] = rng.uniform(0.5, 2.0) * (rng.index(2) == 0 ? 1.0 : -1.0);
  }
  return Metric::diagonal(d);
}

Metric lorentzian_diagonal_metric(Rng& rng) {
  Vec4r d;
  d[0] = rng.uniform(0.5, 2.0);
  for (int i = 1; i < kDim; ++i) d[i] = -rng.uniform(0.5, 2.0);
  return Metric::diagonal(d);
}

Mat4r isometry(Rng& rng, const Metric& g, double max_generator_norm) {
  Mat4r s = Mat4r::Zero();
  for (int i = 0; i < kDim; ++i) {
    for (int j = i + 1; j < kDim; ++j) {
      s(i, j) = rng.uniform(-1.0, 1.0);
      s(j, i) = -s(i, j);
    }
  }
  Mat4r lambda = g.matrix().inverse() * s;
  const double norm = lambda.operatorNorm();
  if (norm > max_generator_norm) lambda *= max_generator_norm / norm;
  return lambda.exp();
}

Mat4r non_isometry(Rng& rng, const Metric& g) {
  for (;;) {
    const Mat4r a = rng.mat4r();
    if (std::abs(a.determinant()) < 0.1) continue;
    if ((a.transpose() * g.matrix() * a - g.matrix()).cwiseAbs().maxCoeff() < 1e-3) continue;
    return a;
  }
}

Mat4r invertible(Rng& rng) {
  for (;;) {
    const Mat4r a = rng.mat4r();
    if (std::abs(a.determinant()) >= 0.1) return a;
  }
}

}  // namespace sample

Mat4r rotation(int i, int j, double theta) {
  Mat4r a = Mat4r::Identity();
  a(i, i) = std::cos(theta);
  a(j, j) = std::cos(theta);
  a(j, i) = -std::sin(theta);
  a(i, j) = std::sin(theta);
  return a;
}

Mat4r boost(int k, double chi) {
  Mat4r a = Mat4r::Identity();
  a(0, 0) = std::cosh(chi);
  a(k, k) = std::cosh(chi);
  a(k, 0) = -std::sinh(chi);
  a(0, k) = -std::sinh(chi);
  return a;
}

Mat4r parity() { return Vec4r(1, -1, -1, -1).asDiagonal(); }

Mat4r time_reversal() { return Vec4r(-1, 1, 1, 1).asDiagonal(); }

}  // namespace spinrep
