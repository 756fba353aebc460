#pragma once

/// Nonlinear Fourier transform of finite Dirac combs  u = sum_n u_n delta_{x_n}
/// with arbitrary (non-equidistant) poles 0 < x_1 < ... < x_N < 1.
///
/// The transform is the ordered product
///
///   F(z)   = E(1, z) * prod_{n=N..1} Ad_{E(-x_n, z)} R(u_n)
///   F_r(z) = E(-1, z) F(z) = prod_{n=N..1} Ad_{E(-x_n, z)} R(u_n)
///
/// and is represented exactly as an `ExpMat`. The inverse is layer peeling: the
/// rightmost delta of the off-diagonal entry sits at x_N and carries
/// e^{i phi_N} tan(r_N) times the weight of the delta at 0 of the diagonal entry.

#include <cmath>
#include <span>
#include <string>
#include <vector>

#include "nlft/errors.hpp"
#include "nlft/exppoly.hpp"
#include "nlft/su2.hpp"
#include "nlft/tolerances.hpp"

namespace nlft {

struct Pole {
  double x = 0.0;
  Complex u{};

  friend bool operator==(const Pole&, const Pole&) = default;
};

struct DeltaDistribution {
  std::vector<Pole> poles;  // strictly increasing x in (0, 1)

  std::size_t size() const noexcept { return poles.size(); }
  bool empty() const noexcept { return poles.empty(); }

  friend bool operator==(const DeltaDistribution&, const DeltaDistribution&) = default;
};

inline void validate(const DeltaDistribution& dist) {
  double prev = 0.0;
  for (std::size_t i = 0; i < dist.poles.size(); ++i) {
    const Pole& p = dist.poles[i];
    if (!std::isfinite(p.x) || !std::isfinite(p.u.real()) || !std::isfinite(p.u.imag())) {
      throw Error(ErrorCode::InvalidDistribution, "non-finite pole " + std::to_string(i));
    }
    if (!(p.x > prev) || !(p.x < 1.0)) {
      throw Error(ErrorCode::InvalidDistribution,
                  "poles must satisfy 0 < x_1 < ... < x_N < 1 (violated at index " + std::to_string(i) + ")");
    }
    prev = p.x;
  }
}

/// prod_{n=N..1} Ad_{E(-x_n, z)} R(u_n) without any range checks on x. Shared by
/// the reduced transform and the dual transform, which feeds masses as poles.
inline ExpMat conjugated_rotation_product(std::span<const Pole> poles, const Tolerances& tol = {}) {
  ExpMat acc = ExpMat::identity();
  for (auto it = poles.rbegin(); it != poles.rend(); ++it) acc = em_mul(acc, em_conjugated_rotation(it->x, it->u), tol);
  return acc;
}

inline ExpMat forward_d(const DeltaDistribution& dist, const Tolerances& tol = {}) {
  validate(dist);
  return em_mul(em_phase(1.0), conjugated_rotation_product(dist.poles, tol), tol);
}

/// Left multiplication by E(-1, z).
inline ExpMat reduce_d(const ExpMat& m, const Tolerances& tol = {}) {
  return {ep_shift(m.a, 0.5, tol), ep_shift(m.b, 0.5, tol)};
}

inline ExpMat forward_reduced_d(const DeltaDistribution& dist, const Tolerances& tol = {}) {
  validate(dist);
  return conjugated_rotation_product(dist.poles, tol);
}

/// Direct QMat product E(dx_N) R(u_N) ... E(dx_1) R(u_1) E(dx_0) at one z.
inline QMat forward_d_at(const DeltaDistribution& dist, double z) {
  validate(dist);
  QMat acc = QMat::identity();
  double right = 1.0;
  for (auto it = dist.poles.rbegin(); it != dist.poles.rend(); ++it) {
    acc = acc * phase_factor(right - it->x, z) * rotation_factor(it->u);
    right = it->x;
  }
  return acc * phase_factor(right, z);
}

struct PeelD {
  double x = 0.0;
  Complex u{};
  ExpMat next;
};

inline PeelD peel_step_d(const ExpMat& m, const Tolerances& tol = {}) {
  if (m.b.empty()) throw Error(ErrorCode::EmptyOffDiagonal, "no delta left to peel");
  const Complex a0 = ep_at_zero(m.a, tol.eps_f);
  if (std::abs(a0) <= tol.eps_peel) {
    throw Error(ErrorCode::VanishingDiagonal,
                "weight of the delta at 0 in the diagonal entry is " + std::to_string(std::abs(a0)));
  }
  const Term rightmost = ep_rightmost(m.b);
  const Complex u = std::polar(std::atan(std::abs(rightmost.coeff / a0)), safe_arg(rightmost.coeff));
  // E(-x) R(u)^{-1} E(x) is the conjugated rotation of -u.
  ExpMat next = em_mul(em_conjugated_rotation(rightmost.freq, -u), m, tol);
  return {rightmost.freq, u, std::move(next)};
}

namespace detail {

// Residual of an ExpMat against the identity: l1 distance of a from 1 plus l1 of b.
inline double identity_residual(const ExpMat& m, const Tolerances& tol) {
  return ep_l1(ep_sub(m.a, ExpPoly::constant(1.0), Tolerances{tol.eps_f, -1.0})) + ep_l1(m.b);
}

}  // namespace detail

inline DeltaDistribution inverse_d(const ExpMat& m, int max_poles, const Tolerances& tol = {}) {
  std::vector<Pole> peeled;
  ExpMat current = m;
  while (!current.b.empty()) {
    if (static_cast<int>(peeled.size()) >= max_poles) {
      throw Error(ErrorCode::NotInImage, "off-diagonal entry still nonzero after " + std::to_string(max_poles) +
                                             " peels");
    }
    PeelD step = peel_step_d(current, tol);
    if (!(step.x > 0.0 && step.x < 1.0) || (!peeled.empty() && !(step.x < peeled.back().x))) {
      throw Error(ErrorCode::NotInImage, "peeled pole at " + std::to_string(step.x) + " breaks ordering in (0, 1)");
    }
    peeled.push_back({step.x, step.u});
    current = std::move(step.next);
  }
  const double residual = detail::identity_residual(current, tol);
  if (residual >= tol.eps_member) {
    throw Error(ErrorCode::NotInImage, "residual after peeling is " + std::to_string(residual));
  }
  return {std::vector<Pole>(peeled.rbegin(), peeled.rend())};
}

/// True when exactly `num_poles` peels leave the identity.
inline bool membership_d(const ExpMat& m, int num_poles, const Tolerances& tol = {}) {
  try {
    ExpMat current = m;
    for (int k = 0; k < num_poles; ++k) current = peel_step_d(current, tol).next;
    return detail::identity_residual(current, tol) < tol.eps_member;
  } catch (const Error&) {
    return false;
  }
}

/// Inverse for transforms of u_hat = sum dx_n u_n delta_{x_n}, dx_n = x_{n+1} - x_n, x_{N+1} = 1.
inline DeltaDistribution inverse_d_weighted(const ExpMat& m, int max_poles, const Tolerances& tol = {}) {
  DeltaDistribution dist = inverse_d(m, max_poles, tol);
  for (std::size_t n = 0; n < dist.poles.size(); ++n) {
    const double next_x = n + 1 < dist.poles.size() ? dist.poles[n + 1].x : 1.0;
    const double gap = next_x - dist.poles[n].x;
    if (gap <= tol.eps_f) throw Error(ErrorCode::DegenerateGap, "gap after pole " + std::to_string(n));
    dist.poles[n].u /= gap;
  }
  return dist;
}

}  // namespace nlft
