#pragma once

/// Dual delta-comb transform: the roles of the gaps xi_n = x_{n+1} - x_n and the
/// masses u_n = v_n - v_{n-1} are exchanged. For constant masses the reduced dual
/// transform, divided by C(xi) = prod cos xi_n, is an Euler grid transform of
/// the signal w_n = -i M tan xi_n, so the cheap FFT peeling inverts it.

#include <cmath>
#include <span>
#include <string>
#include <vector>

#include "nlft/dft.hpp"
#include "nlft/errors.hpp"
#include "nlft/exppoly.hpp"
#include "nlft/nlft_e.hpp"
#include "nlft/su2.hpp"
#include "nlft/tolerances.hpp"

namespace nlft {

/// Gaps xi_0, ..., xi_N between 0 = x_0 < x_1 < ... < x_N < x_{N+1} = 1.
struct GapVector {
  std::vector<double> xi;

  std::size_t size() const noexcept { return xi.size(); }

  /// Interior poles x_1, ..., x_N.
  std::vector<double> poles() const {
    std::vector<double> x;
    if (xi.empty()) return x;
    x.reserve(xi.size() - 1);
    double acc = 0.0;
    for (std::size_t n = 0; n + 1 < xi.size(); ++n) {
      acc += xi[n];
      x.push_back(acc);
    }
    return x;
  }
};

inline void validate(const GapVector& g, double sum_tol = 1e-12) {
  if (g.xi.empty()) throw Error(ErrorCode::LengthMismatch, "gap vector is empty");
  double sum = 0.0;
  for (double x : g.xi) {
    if (!(x > 0.0) || !std::isfinite(x)) throw Error(ErrorCode::InvalidDistribution, "gaps must be positive");
    sum += x;
  }
  if (std::abs(sum - 1.0) > sum_tol) {
    throw Error(ErrorCode::InvalidDistribution, "gaps sum to " + std::to_string(sum) + ", expected 1");
  }
}

/// Cumulative masses v_0, ..., v_{N+1} with v_{N+1} = 1.
struct MassVector {
  std::vector<double> v;

  std::size_t size() const noexcept { return v.size(); }
};

/// v_n = n / M for n = 0..M-1 and v_M = 1: u_0 = 0 and every other mass is 1/M.
inline MassVector constant_masses(std::size_t M) {
  MassVector m;
  m.v.reserve(M + 1);
  for (std::size_t n = 0; n <= M; ++n) m.v.push_back(static_cast<double>(n) / static_cast<double>(M));
  return m;
}

/// The dual transform at one z:
///   R(1 - v_N, z) E(xi_N) R(v_N - v_{N-1}, z) E(xi_{N-1}) ... R(v_1 - v_0, z) E(xi_0) R(v_0, z)
/// with E(xi) = diag(e^{i xi}, e^{-i xi}) and R(v, z) the real rotation by pi v z.
inline QMat forward_dual(const GapVector& xi, const MassVector& v, double z) {
  if (v.size() != xi.size() + 1) {
    throw Error(ErrorCode::LengthMismatch, "mass vector needs " + std::to_string(xi.size() + 1) + " entries");
  }
  QMat acc = QMat::identity();
  for (std::size_t n = xi.size(); n >= 1; --n) {
    acc = acc * dual_phase_factor(v.v[n] - v.v[n - 1], z) * QMat{std::polar(1.0, xi.xi[n - 1]), Complex{}};
  }
  return acc * dual_phase_factor(v.v[0], z);
}

/// Reduced dual transform prod_{n=N..0} Ad_{E(-v_n, zeta)} R_hat(xi_n) in the variable zeta.
inline ExpMat hat_forward_dual(const GapVector& xi, std::span<const double> masses, const Tolerances& tol = {}) {
  if (masses.size() != xi.size()) {
    throw Error(ErrorCode::LengthMismatch, "need one mass position per gap");
  }
  ExpMat acc = ExpMat::identity();
  for (std::size_t n = xi.size(); n-- > 0;) {
    const QMat r = dual_rotation_factor(xi.xi[n]);
    acc = em_mul(acc, ExpMat{ExpPoly::constant(r.a), ExpPoly::monomial(masses[n], r.b)}, tol);
  }
  return acc;
}

inline ExpMat hat_forward_dual(const GapVector& xi, const MassVector& v, const Tolerances& tol = {}) {
  if (v.size() != xi.size() + 1) throw Error(ErrorCode::LengthMismatch, "mass vector needs one entry per gap plus one");
  return hat_forward_dual(xi, std::span<const double>(v.v).first(xi.size()), tol);
}

/// Samples of the constant-mass reduced dual transform at zeta = 0, ..., M-1.
inline std::vector<QMat> constmass_samples(const GapVector& xi, const Tolerances& tol = {}) {
  const std::size_t M = xi.size();
  const ExpMat m = hat_forward_dual(xi, constant_masses(M), tol);
  std::vector<QMat> samples;
  samples.reserve(M);
  for (std::size_t zeta = 0; zeta < M; ++zeta) samples.push_back(em_eval(m, static_cast<double>(zeta)));
  return samples;
}

struct ConstMassLimits {
  double min_c = 1e-8;         // |C(xi)| below this is VanishingC
  double max_real_part = 1e-7; // recovered -i tan(xi) must be imaginary to this level
  double sum_tol = 1e-8;       // recovered gaps must sum to one
};

inline GapVector inverse_dual_constmass(std::span<const QMat> samples, std::size_t M, const Tolerances& tol = {},
                                        const ConstMassLimits& limits = {}) {
  if (M == 0 || samples.size() != M) {
    throw Error(ErrorCode::LengthMismatch, "expected " + std::to_string(M) + " samples");
  }
  std::vector<Complex> a(M);
  for (std::size_t z = 0; z < M; ++z) a[z] = samples[z].a;
  const Complex c = idft(a)[0];
  if (std::abs(c) < limits.min_c) throw Error(ErrorCode::VanishingC, "C(xi) = " + std::to_string(std::abs(c)));
  if (std::abs(c.imag()) > limits.max_real_part * std::max(1.0, std::abs(c))) {
    throw Error(ErrorCode::NotConstMass, "zero-frequency diagonal weight is not real");
  }

  GridMat h;
  h.samples.reserve(M);
  for (const QMat& s : samples) h.samples.push_back((1.0 / c.real()) * s);

  const auto peeled = detail::peel_all_e(h);
  const double residual = max_abs_diff(peeled.final_grid, h);
  if (!(residual < tol.eps_member)) {
    throw Error(ErrorCode::NotConstMass, "peeling residual " + std::to_string(residual));
  }

  GapVector out;
  out.xi.reserve(M);
  double sum = 0.0;
  for (Complex w : peeled.signal.u) {
    const Complex scaled = w / static_cast<double>(M);  // = -i tan(xi_n)
    if (std::abs(scaled.real()) > limits.max_real_part) {
      throw Error(ErrorCode::NotConstMass, "recovered value has real part " + std::to_string(scaled.real()));
    }
    const double g = std::atan(-scaled.imag());
    if (!(g > 0.0)) throw Error(ErrorCode::NotConstMass, "recovered gap is not positive");
    out.xi.push_back(g);
    sum += g;
  }
  if (std::abs(sum - 1.0) > limits.sum_tol) {
    throw Error(ErrorCode::NotConstMass, "recovered gaps sum to " + std::to_string(sum));
  }
  return out;
}

struct ComplexityReport {
  double full = 0.0;      // N^2 ln N
  double modified = 0.0;  // sum_{k<=N} k ln k = ln H(N)
  double difference = 0.0;
};

inline ComplexityReport complexity_report(long N) {
  ComplexityReport r;
  const double n = static_cast<double>(N);
  r.full = n * n * std::log(n);
  for (long k = 2; k <= N; ++k) r.modified += static_cast<double>(k) * std::log(static_cast<double>(k));
  r.difference = r.full - r.modified;
  return r;
}

}  // namespace nlft
