#pragma once

#include <bit>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace spinrep {

using Complex = std::complex<double>;

inline constexpr int kDim = 4;
inline constexpr int kBlades = 16;

using Coeffs16 = Eigen::Matrix<Complex, kBlades, 1>;
using EndoOp = Eigen::Matrix<Complex, kBlades, kBlades>;
using MatrixElem = Eigen::Matrix<Complex, kDim, kDim>;
using Spinor = Eigen::Matrix<Complex, kDim, 1>;
using Vec4c = Eigen::Matrix<Complex, kDim, 1>;
using Vec4r = Eigen::Matrix<double, kDim, 1>;
using Mat4r = Eigen::Matrix<double, kDim, kDim>;

// Bit mu set <=> generator mu is a factor. Factors are always read in
// ascending index order.
using BladeIndex = unsigned;

inline constexpr BladeIndex kPseudoscalar = 0b1111;

constexpr int grade(BladeIndex b) { return std::popcount(b); }

// Sign picked up when the factors of the concatenation a·b are sorted into
// ascending order. Only meaningful when a and b share no generator.
constexpr int reorder_sign(BladeIndex a, BladeIndex b) {
  int swaps = 0;
  for (int j = 0; j < kDim; ++j) {
    if (b & (1u << j)) swaps += std::popcount(a >> (j + 1));
  }
  return (swaps & 1) ? -1 : 1;
}

std::string blade_label(BladeIndex b, const std::string& symbol, const std::string& unit);

// Errors

class DegenerateMetric : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotIsometry : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class LiftNotFound : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NoRealFactorization : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Symmetric real bilinear form on the generator space.
class Metric {
 public:
  static constexpr double kDefaultDegeneracyTol = 1e-12;

  // Throws std::invalid_argument unless g is exactly symmetric.
  explicit Metric(const Mat4r& g, double degeneracy_tol = kDefaultDegeneracyTol);

  static Metric minkowski();           // diag(1,-1,-1,-1)
  static Metric minkowski_mostly_plus(); // diag(-1,1,1,1)
  static Metric diagonal(const Vec4r& d);

  const Mat4r& matrix() const { return g_; }
  double operator()(int mu, int nu) const { return g_(mu, nu); }
  double det() const { return det_; }
  double degeneracy_tol() const { return tol_; }
  bool is_nondegenerate() const;
  bool is_diagonal() const;
  void require_nondegenerate() const;

  // g(u, v) extended bilinearly (no conjugation) to complex vectors.
  Complex form(const Vec4c& u, const Vec4c& v) const;

 private:
  Mat4r g_;
  double det_;
  double tol_;
};

enum class Orientation : int { Positive = 1, Negative = -1 };

inline int sign_of(Orientation o) { return static_cast<int>(o); }

}  // namespace spinrep
