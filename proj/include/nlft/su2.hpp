#pragma once

/// Quaternion-form 2x2 complex matrices
///
///   | a    b |
///   | -b*  a*|
///
/// and the elementary factors the transforms are built from. `Mat2` is the
/// dense form.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <numbers>

#include "nlft/errors.hpp"

namespace nlft {

using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr Complex kI{0.0, 1.0};

struct QMat {
  Complex a{1.0, 0.0};
  Complex b{0.0, 0.0};

  static constexpr QMat identity() noexcept { return {}; }
  static constexpr QMat zero() noexcept { return {Complex{}, Complex{}}; }

  double det() const noexcept { return std::norm(a) + std::norm(b); }

  friend QMat operator+(const QMat& l, const QMat& r) noexcept { return {l.a + r.a, l.b + r.b}; }
  friend QMat operator-(const QMat& l, const QMat& r) noexcept { return {l.a - r.a, l.b - r.b}; }
  // Real scalars only.
  friend QMat operator*(double s, const QMat& m) noexcept { return {s * m.a, s * m.b}; }
  QMat& operator+=(const QMat& r) noexcept {
    a += r.a;
    b += r.b;
    return *this;
  }
};

/// General 2x2 complex matrix, row-major.
struct Mat2 {
  std::array<Complex, 4> e{Complex{1.0}, Complex{}, Complex{}, Complex{1.0}};

  Complex& operator()(int r, int c) { return e[static_cast<std::size_t>(2 * r + c)]; }
  const Complex& operator()(int r, int c) const { return e[static_cast<std::size_t>(2 * r + c)]; }

  friend Mat2 operator*(const Mat2& l, const Mat2& r) {
    Mat2 out;
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        out(i, j) = l(i, 0) * r(0, j) + l(i, 1) * r(1, j);
      }
    }
    return out;
  }
};

inline Mat2 to_mat2(const QMat& m) {
  return Mat2{{m.a, m.b, -std::conj(m.b), std::conj(m.a)}};
}

/// Largest entrywise modulus of the difference.
inline double max_abs_diff(const Mat2& l, const Mat2& r) {
  double d = 0.0;
  for (std::size_t i = 0; i < 4; ++i) d = std::max(d, std::abs(l.e[i] - r.e[i]));
  return d;
}

inline double max_abs_diff(const QMat& l, const QMat& r) {
  return std::max(std::abs(l.a - r.a), std::abs(l.b - r.b));
}

/// m1 * m2.
inline QMat compose(const QMat& m1, const QMat& m2) noexcept {
  return {m1.a * m2.a - m1.b * std::conj(m2.b), m1.a * m2.b + m1.b * std::conj(m2.a)};
}

inline QMat operator*(const QMat& l, const QMat& r) noexcept { return compose(l, r); }

inline QMat invert(const QMat& m) {
  const double d = m.det();
  if (d < 1e-300) throw Error(ErrorCode::SingularMatrix, "quaternion matrix has vanishing determinant");
  return {std::conj(m.a) / d, -m.b / d};
}

/// E(x, z) = diag(e^{i pi x z}, e^{-i pi x z}).
inline QMat phase_factor(double x, double z) noexcept {
  return {std::polar(1.0, kPi * x * z), Complex{}};
}

/// E_N(n, z) = diag(e^{i pi n z / N}, e^{-i pi n z / N}).
inline QMat phase_factor_N(long n, long z, long N) noexcept {
  const long period = 2 * N;
  long k = (n * z) % period;
  if (k < 0) k += period;
  return {std::polar(1.0, kPi * static_cast<double>(k) / static_cast<double>(N)), Complex{}};
}

/// Polar angle with arg(0) := 0.
inline double safe_arg(Complex u) noexcept { return u == Complex{} ? 0.0 : std::arg(u); }

/// R(u) = [[cos r, e^{i phi} sin r], [-e^{-i phi} sin r, cos r]] with u = e^{i phi} r.
inline QMat rotation_factor(Complex u) noexcept {
  const double r = std::abs(u);
  return {Complex{std::cos(r)}, std::sin(r) * std::polar(1.0, safe_arg(u))};
}

/// U = [[0, u], [-conj(u), 0]].
inline constexpr QMat rotation_generator(Complex u) noexcept { return {Complex{}, u}; }

/// R_hat(xi) = cos(xi) I + sin(xi) L with L = [[0, -i], [-i, 0]].
inline QMat dual_rotation_factor(double xi) noexcept {
  return {Complex{std::cos(xi)}, Complex{0.0, -std::sin(xi)}};
}

/// Real rotation R(v, z) = [[cos pi v z, sin pi v z], [-sin pi v z, cos pi v z]].
inline QMat dual_phase_factor(double v, double z) noexcept {
  const double t = kPi * v * z;
  return {Complex{std::cos(t)}, Complex{std::sin(t)}};
}

/// A^{-1} m A with A = [[i, -i], [1, 1]].
inline Mat2 conjugate_by_A(const Mat2& m) {
  const Mat2 A{{kI, -kI, Complex{1.0}, Complex{1.0}}};
  const Mat2 A_inv{{Complex{0.0, -0.5}, Complex{0.5}, Complex{0.0, 0.5}, Complex{0.5}}};
  return A_inv * m * A;
}

}  // namespace nlft
