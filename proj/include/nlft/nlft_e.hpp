#pragma once

/// Euler discretization on a uniform grid of N samples:
///
///   F(z) = prod_{n=N-1..0} (I + L(n, z) / N),   L(n, z) = [[0, e^{-2 pi i n z/N} u_n], [-e^{2 pi i n z/N} conj u_n, 0]]
///
/// sampled at z = 0, ..., N-1, and its inverse by N FFT-based peels. Each peel
/// reads u_{N-1} off the last inverse-DFT coefficient of the off-diagonal
/// samples, strips the leftmost factor and re-gauges, which leaves the transform
/// of u cyclically shifted by one.

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <span>
#include <string>
#include <vector>

#include "nlft/dft.hpp"
#include "nlft/errors.hpp"
#include "nlft/su2.hpp"
#include "nlft/tolerances.hpp"

namespace nlft {

using BigInt = boost::multiprecision::cpp_int;

struct DiscreteSignal {
  std::vector<Complex> u;

  std::size_t size() const noexcept { return u.size(); }
  friend bool operator==(const DiscreteSignal&, const DiscreteSignal&) = default;
};

/// Samples of a matrix function at z = 0, 1, ..., N-1.
struct GridMat {
  std::vector<QMat> samples;

  std::size_t size() const noexcept { return samples.size(); }
  static GridMat identity(std::size_t n) { return {std::vector<QMat>(n, QMat::identity())}; }
};

inline double max_abs_diff(const GridMat& l, const GridMat& r) {
  if (l.size() != r.size()) throw Error(ErrorCode::LengthMismatch, "grids of different length");
  double d = 0.0;
  for (std::size_t z = 0; z < l.size(); ++z) d = std::max(d, max_abs_diff(l.samples[z], r.samples[z]));
  return d;
}

namespace detail {

/// e^{-2 pi i k / N} with k reduced mod N.
inline Complex unit_root(long k, long n) {
  long r = k % n;
  if (r < 0) r += n;
  return std::polar(1.0, -2.0 * kPi * static_cast<double>(r) / static_cast<double>(n));
}

}  // namespace detail

/// I + L(n, z)/N as a quaternion matrix.
inline QMat euler_factor(Complex u, long n, long z, long N) {
  return {Complex{1.0}, detail::unit_root(n * z, N) * u / static_cast<double>(N)};
}

inline QMat forward_e_at(const DiscreteSignal& sig, long z) {
  const long N = static_cast<long>(sig.size());
  QMat acc = QMat::identity();
  for (long n = N - 1; n >= 0; --n) acc = acc * euler_factor(sig.u[static_cast<std::size_t>(n)], n, z, N);
  return acc;
}

inline GridMat forward_e(const DiscreteSignal& sig) {
  if (sig.size() == 0) throw Error(ErrorCode::LengthMismatch, "signal must have at least one sample");
  GridMat g;
  g.samples.reserve(sig.size());
  for (long z = 0; z < static_cast<long>(sig.size()); ++z) g.samples.push_back(forward_e_at(sig, z));
  return g;
}

struct PeelE {
  Complex u{};  // recovered component (not divided by N)
  GridMat next;
};

/// One layer-peeling step. Recovers the last component u_{N-1} of the signal
/// whose transform is `g`, and returns the transform of the signal cyclically
/// shifted by one, (u_{N-1}, u_0, ..., u_{N-2}).
inline PeelE peel_step_e(const GridMat& g) {
  const long N = static_cast<long>(g.size());
  if (N == 0) throw Error(ErrorCode::LengthMismatch, "empty grid");

  std::vector<Complex> b(g.samples.size());
  for (std::size_t z = 0; z < b.size(); ++z) b[z] = g.samples[z].b;
  const Complex u = static_cast<double>(N) * idft(b)[static_cast<std::size_t>(N - 1)];

  const QMat last_generator = euler_factor(u, 0, 0, N);  // I + U/N
  PeelE out{u, {}};
  out.next.samples.reserve(g.samples.size());
  for (long z = 0; z < N; ++z) {
    const QMat stripped = invert(euler_factor(u, N - 1, z, N)) * g.samples[static_cast<std::size_t>(z)];
    // Ad by E_N(-1, z) multiplies the off-diagonal entry by e^{-2 pi i z/N},
    // moving every factor index up by one.
    const QMat shifted{stripped.a, stripped.b * detail::unit_root(z, N)};
    out.next.samples.push_back(shifted * last_generator);
  }
  return out;
}

namespace detail {

struct PeelAllE {
  DiscreteSignal signal;
  GridMat final_grid;
};

inline PeelAllE peel_all_e(const GridMat& g) {
  const std::size_t N = g.size();
  PeelAllE out{{std::vector<Complex>(N)}, g};
  for (std::size_t k = 0; k < N; ++k) {
    PeelE step = peel_step_e(out.final_grid);
    out.signal.u[N - 1 - k] = step.u;
    out.final_grid = std::move(step.next);
  }
  return out;
}

}  // namespace detail

inline DiscreteSignal inverse_e(const GridMat& g, const Tolerances& tol = {}) {
  DiscreteSignal sig = detail::peel_all_e(g).signal;
  const double residual = max_abs_diff(forward_e(sig), g);
  if (!(residual < tol.eps_member)) {
    throw Error(ErrorCode::NotInImage, "transform of the recovered signal misses the grid by " + std::to_string(residual));
  }
  return sig;
}

/// After N peels the grid must come back to itself.
inline bool membership_e(const GridMat& g, const Tolerances& tol = {}) {
  if (g.size() == 0) return false;
  return max_abs_diff(detail::peel_all_e(g).final_grid, g) < tol.eps_member;
}

/// #D_{2k-1}(l) = C(l, k-1) C(N-l-1, k-1).
inline BigInt stratum_count(long N, long k, long l) {
  auto binomial = [](long n, long r) -> BigInt {
    if (r < 0 || n < 0 || r > n) return 0;
    BigInt c = 1;
    for (long i = 1; i <= r; ++i) {
      c *= n - r + i;
      c /= i;
    }
    return c;
  };
  if (N < 1 || k < 1 || l < 0 || l > N - 1) return 0;
  return binomial(l, k - 1) * binomial(N - l - 1, k - 1);
}

struct StrataBrackets {
  std::vector<Complex> alpha;  // a(z) = 1 + dft(alpha)(z)
  std::vector<Complex> beta;   // b(z) = dft(beta)(z)
};

inline constexpr std::size_t kMaxEnumerationLength = 14;

/// Brute-force coefficients of e^{-2 pi i l z/N} in the Dyson expansion of the
/// Euler transform, grouped by the alternating index sum l of each ordered
/// product U_{n_d} ... U_{n_1} (2^N terms).
inline StrataBrackets dyson_strata_e(const DiscreteSignal& sig) {
  const std::size_t N = sig.size();
  if (N > kMaxEnumerationLength) throw Error(ErrorCode::TooLarge, "stratum enumeration capped at N = 14");
  StrataBrackets out{std::vector<Complex>(N), std::vector<Complex>(N)};
  const double inv_n = 1.0 / static_cast<double>(N);
  for (unsigned long mask = 1; mask < (1UL << N); ++mask) {
    QMat product = QMat::identity();
    long alternating = 0;
    int sign = 1;
    double scale = 1.0;
    bool even = true;
    for (long n = static_cast<long>(N) - 1; n >= 0; --n) {
      if (!(mask & (1UL << n))) continue;
      product = product * rotation_generator(sig.u[static_cast<std::size_t>(n)]);
      alternating += sign * n;
      sign = -sign;
      scale *= inv_n;
      even = !even;
    }
    const auto l = static_cast<std::size_t>(alternating);
    if (even) {
      out.alpha[l] += scale * product.a;
    } else {
      out.beta[l] += scale * product.b;
    }
  }
  return out;
}

}  // namespace nlft
