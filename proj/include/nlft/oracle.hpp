#pragma once

/// Brute-force reference computations, exponential in N or otherwise slow.

#include <cmath>
#include <string>
#include <vector>

#include "nlft/errors.hpp"
#include "nlft/exppoly.hpp"
#include "nlft/nlft_d.hpp"
#include "nlft/nlft_e.hpp"
#include "nlft/su2.hpp"
#include "nlft/tolerances.hpp"

namespace nlft::oracle {

/// I + sum_d N^{-d} sum_{n_d > ... > n_1} L(n_d, z) ... L(n_1, z), enumerated over all subsets.
inline QMat dyson_product_e(const DiscreteSignal& sig, long z) {
  const std::size_t N = sig.size();
  if (N > kMaxEnumerationLength) throw Error(ErrorCode::TooLarge, "Dyson enumeration capped at N = 14");
  const double inv_n = 1.0 / static_cast<double>(N);
  QMat sum = QMat::identity();
  for (unsigned long mask = 1; mask < (1UL << N); ++mask) {
    QMat product = QMat::identity();
    for (long n = static_cast<long>(N) - 1; n >= 0; --n) {
      if (!(mask & (1UL << n))) continue;
      const double angle = -2.0 * kPi * static_cast<double>(n) * static_cast<double>(z) / static_cast<double>(N);
      product = product * (inv_n * rotation_generator(std::polar(1.0, angle) * sig.u[static_cast<std::size_t>(n)]));
    }
    sum += product;
  }
  return sum;
}

/// Reduced delta-comb transform expanded over all index subsets:
///   C(u) I + sum_{n_1 < ... < n_d} E(-2 (x_{n_d} - x_{n_{d-1}} + ...), z) V_{n_1..n_d}(u).
inline ExpMat dyson_delta_d(const DeltaDistribution& dist, const Tolerances& tol = {}) {
  validate(dist);
  const std::size_t N = dist.size();
  if (N > kMaxEnumerationLength) throw Error(ErrorCode::TooLarge, "Dyson enumeration capped at N = 14");
  std::vector<double> cos_r(N);
  std::vector<QMat> generators(N);
  for (std::size_t n = 0; n < N; ++n) {
    const double r = std::abs(dist.poles[n].u);
    cos_r[n] = std::cos(r);
    generators[n] = rotation_generator(std::sin(r) * std::polar(1.0, safe_arg(dist.poles[n].u)));
  }
  std::vector<Term> a_raw, b_raw;
  for (unsigned long mask = 0; mask < (1UL << N); ++mask) {
    QMat product = QMat::identity();
    double freq = 0.0;
    double sign = 1.0;
    bool even = true;
    for (std::size_t k = N; k-- > 0;) {
      if (mask & (1UL << k)) {
        product = product * generators[k];
        freq += sign * dist.poles[k].x;
        sign = -sign;
        even = !even;
      } else {
        product = cos_r[k] * product;
      }
    }
    if (even) {
      a_raw.push_back({freq, product.a});
    } else {
      b_raw.push_back({freq, product.b});
    }
  }
  return {ep_normalize(std::move(a_raw), tol), ep_normalize(std::move(b_raw), tol)};
}

struct StepProfile {
  DeltaDistribution dist;
  double epsilon = 1e-3;
};

inline double sinc(double x) { return x == 0.0 ? 1.0 : std::sin(x) / x; }

/// Exp([[i t, u], [-conj u, -i t]]) in closed form, t = eps pi z.
inline QMat step_rotation(Complex u, double t) {
  const double A = std::sqrt(std::norm(u) + t * t);
  const double s = sinc(A);
  return {Complex{std::cos(A), t * s}, u * s};
}

/// Exact transform of the step approximation of width epsilon: each spike is a
/// constant piece of height u_n / epsilon, the gaps are free phase rotations.
inline QMat step_transform(const StepProfile& profile, double z) {
  const auto& poles = profile.dist.poles;
  validate(profile.dist);
  const double eps = profile.epsilon;
  const std::size_t N = poles.size();
  double min_gap = N == 0 ? 1.0 : poles.front().x;
  for (std::size_t n = 0; n < N; ++n) {
    const double next = n + 1 < N ? poles[n + 1].x : 1.0;
    min_gap = std::min(min_gap, next - poles[n].x);
  }
  if (!(eps > 0.0) || eps >= min_gap) {
    throw Error(ErrorCode::EpsilonTooLarge, "epsilon must be positive and below the smallest gap");
  }
  auto free_piece = [&](double length) {
    return QMat{std::polar(1.0, kPi * length * z), Complex{}};
  };
  QMat acc = QMat::identity();
  double right = 1.0;
  for (std::size_t n = N; n-- > 0;) {
    const double trim = (n + 1 == N) ? 0.5 * eps : eps;
    acc = acc * free_piece(right - poles[n].x - trim) * step_rotation(poles[n].u, eps * kPi * z);
    right = poles[n].x;
  }
  return acc * free_piece(right - (N == 0 ? 0.0 : 0.5 * eps));
}

struct GaugePair {
  QMat lhs;
  QMat rhs;
};

/// G(1, n) F(n) against (-1)^n F(n), G(x, z) = diag(e^{-i pi x z}, e^{i pi x z}).
inline GaugePair gauge_check(const StepProfile& profile, long n) {
  const QMat f = step_transform(profile, static_cast<double>(n));
  const QMat gauge = phase_factor(-1.0, static_cast<double>(n));
  return {gauge * f, (n % 2 == 0 ? 1.0 : -1.0) * f};
}

/// All 0 <= n_1 < ... < n_d <= N-1 with n_d - n_{d-1} + ... +- n_1 = l.
inline std::vector<std::vector<int>> enumerate_stratum(int N, int d, long l) {
  if (N > 20 || d > N) throw Error(ErrorCode::TooLarge, "enumeration needs N <= 20 and d <= N");
  std::vector<std::vector<int>> out;
  if (d < 1) return out;
  std::vector<int> current(static_cast<std::size_t>(d));
  auto recurse = [&](auto&& self, int pos, int lo) -> void {
    if (pos == d) {
      long alternating = 0;
      for (int k = 0; k < d; ++k) alternating += ((d - 1 - k) % 2 == 0 ? 1 : -1) * current[static_cast<std::size_t>(k)];
      if (alternating == l) out.push_back(current);
      return;
    }
    for (int n = lo; n <= N - (d - pos); ++n) {
      current[static_cast<std::size_t>(pos)] = n;
      self(self, pos + 1, n + 1);
    }
  };
  recurse(recurse, 0, 0);
  return out;
}

}  // namespace nlft::oracle
