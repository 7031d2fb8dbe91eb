#include "spinrep/common.hpp"

#include <cstdio>

#include <cmath>

namespace spinrep {

std::string blade_label(BladeIndex b, const std::string& symbol, const std::string& unit) {
  if (b == 0) return unit;
  std::string s = symbol;
  for (int mu = 0; mu < kDim; ++mu) {
    if (b & (1u << mu)) s += static_cast<char>('0' + mu);
  }
  return s;
}

Metric::Metric(const Mat4r& g, double degeneracy_tol) : g_(g), det_(g.determinant()), tol_(degeneracy_tol) {
  for (int i = 0; i < kDim; ++i) {
    for (int j = i + 1; j < kDim; ++j) {
      if (g(i, j) != g(j, i)) throw std::invalid_argument("metric is not symmetric");
    }
  }
  if (!(degeneracy_tol > 0)) throw std::invalid_argument("degeneracy tolerance must be positive");
}

Metric Metric::minkowski() { return diagonal(Vec4r(1, -1, -1, -1)); }

Metric Metric::minkowski_mostly_plus() { return diagonal(Vec4r(-1, 1, 1, 1)); }

Metric Metric::diagonal(const Vec4r& d) { return Metric(Mat4r(d.asDiagonal())); }

bool Metric::is_nondegenerate() const { return std::abs(det_) > tol_; }

bool Metric::is_diagonal() const {
  for (int i = 0; i < kDim; ++i) {
    for (int j = 0; j < kDim; ++j) {
      if (i != j && g_(i, j) != 0.0) return false;
    }
  }
  return true;
}

void Metric::require_nondegenerate() const {
  if (!is_nondegenerate()) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "metric is degenerate: |det g| = %.3e is not above tolerance %.3e",
                  std::abs(det_), tol_);
    throw DegenerateMetric(buf);
  }
}

Complex Metric::form(const Vec4c& u, const Vec4c& v) const {
  return (u.transpose() * g_.cast<Complex>() * v)(0, 0);
}

}  // namespace spinrep
