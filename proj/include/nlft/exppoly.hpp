#pragma once

/// Sparse exponential polynomials  p(z) = sum_j c_j e^{-2 pi i y_j z}  over
/// real frequencies y_j, and the quaternion-form matrix functions built from a
/// pair of them. Reading the coefficient list of a `ExpPoly` is the same as
/// taking the distributional inverse Fourier transform of p: the coefficient
/// c_j is the weight of the delta at y_j.

#include <algorithm>
#include <cmath>
#include <span>
#include <utility>
#include <vector>

#include "nlft/errors.hpp"
#include "nlft/su2.hpp"
#include "nlft/tolerances.hpp"

namespace nlft {

struct Term {
  double freq = 0.0;
  Complex coeff{};

  friend bool operator==(const Term&, const Term&) = default;
};

class ExpPoly;
ExpPoly ep_normalize(std::vector<Term> raw, double eps_f, double eps_c);

class ExpPoly {
 public:
  ExpPoly() = default;

  /// Single term c e^{-2 pi i y z}; zero coefficients give the empty polynomial.
  static ExpPoly monomial(double freq, Complex coeff) {
    ExpPoly p;
    if (coeff != Complex{}) p.terms_.push_back({freq, coeff});
    return p;
  }
  static ExpPoly constant(Complex c) { return monomial(0.0, c); }

  std::span<const Term> terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool empty() const noexcept { return terms_.empty(); }

  friend bool operator==(const ExpPoly&, const ExpPoly&) = default;

 private:
  friend ExpPoly ep_normalize(std::vector<Term> raw, double eps_f, double eps_c);
  std::vector<Term> terms_;  // strictly increasing in freq
};

/// Sorts, merges terms closer than eps_f (coefficients summed, frequency set to
/// the coefficient-magnitude-weighted mean) and drops |coeff| <= eps_c.
inline ExpPoly ep_normalize(std::vector<Term> raw, double eps_f, double eps_c) {
  std::sort(raw.begin(), raw.end(), [](const Term& l, const Term& r) { return l.freq < r.freq; });
  ExpPoly out;
  out.terms_.reserve(raw.size());
  std::size_t i = 0;
  while (i < raw.size()) {
    std::size_t j = i + 1;
    while (j < raw.size() && raw[j].freq - raw[j - 1].freq <= eps_f) ++j;

    Term merged = raw[i];
    if (j - i > 1) {
      Complex sum{};
      double weight = 0.0, weighted = 0.0, plain = 0.0;
      for (std::size_t k = i; k < j; ++k) {
        sum += raw[k].coeff;
        const double w = std::abs(raw[k].coeff);
        weight += w;
        weighted += w * raw[k].freq;
        plain += raw[k].freq;
      }
      merged.coeff = sum;
      merged.freq = weight > 0.0 ? weighted / weight : plain / static_cast<double>(j - i);
    }
    if (std::abs(merged.coeff) > eps_c) out.terms_.push_back(merged);
    i = j;
  }
  return out;
}

inline ExpPoly ep_normalize(std::vector<Term> raw, const Tolerances& tol = {}) {
  return ep_normalize(std::move(raw), tol.eps_f, tol.eps_c);
}

inline ExpPoly ep_mul(const ExpPoly& p, const ExpPoly& q, const Tolerances& tol = {}) {
  std::vector<Term> raw;
  raw.reserve(p.size() * q.size());
  for (const Term& s : p.terms()) {
    for (const Term& t : q.terms()) raw.push_back({s.freq + t.freq, s.coeff * t.coeff});
  }
  return ep_normalize(std::move(raw), tol);
}

inline ExpPoly ep_add(const ExpPoly& p, const ExpPoly& q, const Tolerances& tol = {}) {
  std::vector<Term> raw(p.terms().begin(), p.terms().end());
  raw.insert(raw.end(), q.terms().begin(), q.terms().end());
  return ep_normalize(std::move(raw), tol);
}

inline ExpPoly ep_scale(const ExpPoly& p, Complex s, const Tolerances& tol = {}) {
  std::vector<Term> raw;
  raw.reserve(p.size());
  for (const Term& t : p.terms()) raw.push_back({t.freq, s * t.coeff});
  return ep_normalize(std::move(raw), tol);
}

inline ExpPoly ep_sub(const ExpPoly& p, const ExpPoly& q, const Tolerances& tol = {}) {
  std::vector<Term> raw(p.terms().begin(), p.terms().end());
  for (const Term& t : q.terms()) raw.push_back({t.freq, -t.coeff});
  return ep_normalize(std::move(raw), tol);
}

/// Multiplies by e^{-2 pi i shift z}.
inline ExpPoly ep_shift(const ExpPoly& p, double shift, const Tolerances& tol = {}) {
  std::vector<Term> raw;
  raw.reserve(p.size());
  for (const Term& t : p.terms()) raw.push_back({t.freq + shift, t.coeff});
  return ep_normalize(std::move(raw), tol);
}

inline Complex ep_eval(const ExpPoly& p, double z) {
  Complex sum{};
  for (const Term& t : p.terms()) sum += t.coeff * std::polar(1.0, -2.0 * kPi * t.freq * z);
  return sum;
}

inline Term ep_rightmost(const ExpPoly& p) {
  if (p.empty()) throw Error(ErrorCode::EmptyPoly, "rightmost term of an empty exponential polynomial");
  return p.terms().back();
}

/// Weight of the delta at the origin; zero when there is none.
inline Complex ep_at_zero(const ExpPoly& p, double eps_f = Tolerances{}.eps_f) {
  Complex c{};
  for (const Term& t : p.terms()) {
    if (std::abs(t.freq) <= eps_f) c += t.coeff;
  }
  return c;
}

/// Pointwise complex conjugate for real z: (y, c) -> (-y, conj c).
inline ExpPoly ep_conj_reflect(const ExpPoly& p) {
  std::vector<Term> raw;
  raw.reserve(p.size());
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) raw.push_back({-it->freq, std::conj(it->coeff)});
  // Already sorted and separated.
  return ep_normalize(std::move(raw), 0.0, -1.0);
}

/// Sum of coefficient moduli.
inline double ep_l1(const ExpPoly& p) {
  double s = 0.0;
  for (const Term& t : p.terms()) s += std::abs(t.coeff);
  return s;
}

/// z-dependent quaternion-form matrix (a(z), b(z); -conj b(z), conj a(z)).
struct ExpMat {
  ExpPoly a = ExpPoly::constant(1.0);
  ExpPoly b;

  static ExpMat identity() { return {}; }

  friend bool operator==(const ExpMat&, const ExpMat&) = default;
};

inline ExpMat em_mul(const ExpMat& l, const ExpMat& r, const Tolerances& tol = {}) {
  const ExpPoly rb_conj = ep_conj_reflect(r.b);
  const ExpPoly ra_conj = ep_conj_reflect(r.a);
  std::vector<Term> a_raw, b_raw;
  a_raw.reserve(l.a.size() * r.a.size() + l.b.size() * r.b.size());
  b_raw.reserve(l.a.size() * r.b.size() + l.b.size() * r.a.size());
  for (const Term& s : l.a.terms()) {
    for (const Term& t : r.a.terms()) a_raw.push_back({s.freq + t.freq, s.coeff * t.coeff});
    for (const Term& t : r.b.terms()) b_raw.push_back({s.freq + t.freq, s.coeff * t.coeff});
  }
  for (const Term& s : l.b.terms()) {
    for (const Term& t : rb_conj.terms()) a_raw.push_back({s.freq + t.freq, -s.coeff * t.coeff});
    for (const Term& t : ra_conj.terms()) b_raw.push_back({s.freq + t.freq, s.coeff * t.coeff});
  }
  return {ep_normalize(std::move(a_raw), tol), ep_normalize(std::move(b_raw), tol)};
}

inline QMat em_eval(const ExpMat& m, double z) { return {ep_eval(m.a, z), ep_eval(m.b, z)}; }

/// Ad_{E(-x, z)} R(u) = E(-x, z) R(u) E(x, z): a = cos r, b = e^{i phi} sin r e^{-2 pi i x z}.
inline ExpMat em_conjugated_rotation(double x, Complex u) {
  const QMat r = rotation_factor(u);
  return {ExpPoly::constant(r.a), ExpPoly::monomial(x, r.b)};
}

/// E(x, z) as an ExpMat; e^{i pi x z} has frequency -x/2.
inline ExpMat em_phase(double x) { return {ExpPoly::monomial(-0.5 * x, 1.0), ExpPoly{}}; }

/// Largest coefficient modulus of p - q, pairing terms whose frequencies agree
/// within eps_f. A term present on one side only counts with its full weight.
inline double ep_max_coeff_diff(const ExpPoly& p, const ExpPoly& q, double eps_f = Tolerances{}.eps_f) {
  std::vector<Term> raw(p.terms().begin(), p.terms().end());
  for (const Term& t : q.terms()) raw.push_back({t.freq, -t.coeff});
  const ExpPoly diff = ep_normalize(std::move(raw), eps_f, -1.0);
  double d = 0.0;
  for (const Term& t : diff.terms()) d = std::max(d, std::abs(t.coeff));
  return d;
}

inline double em_max_coeff_diff(const ExpMat& l, const ExpMat& r, double eps_f = Tolerances{}.eps_f) {
  return std::max(ep_max_coeff_diff(l.a, r.a, eps_f), ep_max_coeff_diff(l.b, r.b, eps_f));
}

}  // namespace nlft
