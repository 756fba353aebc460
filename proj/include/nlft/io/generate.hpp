#pragma once

// Seeded random instances. Doubles come from the top 53 bits of mt19937_64.

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "nlft/errors.hpp"
#include "nlft/nlft_d.hpp"
#include "nlft/nlft_dual.hpp"
#include "nlft/nlft_e.hpp"

namespace nlft::io {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  Complex polar(double lo, double hi) { return std::polar(uniform(lo, hi), 2.0 * kPi * uniform()); }

 private:
  std::mt19937_64 engine_;
};

struct DeltaConstraints {
  double min_abs = 0.05;
  double max_abs = 1.2;
  double min_gap_factor = 0.5;  // consecutive poles at least min_gap_factor / N apart
};

/// Poles with gaps >= 0.5/N between neighbours and >= 0.25/N to the endpoints.
inline DeltaDistribution gen_delta(int N, std::uint64_t seed, const DeltaConstraints& c = {}) {
  if (N < 1) throw Error(ErrorCode::BadConstraints, "N must be at least 1");
  if (!(c.min_abs >= 0.0 && c.max_abs >= c.min_abs && c.max_abs < kPi / 2)) {
    throw Error(ErrorCode::BadConstraints, "weights must satisfy 0 <= min_abs <= max_abs < pi/2");
  }
  const double gap = c.min_gap_factor / N;
  const double slack = 1.0 - gap * N;  // (N-1) interior gaps plus two half-gap margins
  if (!(slack >= 0.0)) throw Error(ErrorCode::BadConstraints, "gap constraint leaves no room");

  Rng rng(seed);
  std::vector<double> weights(static_cast<std::size_t>(N) + 1);
  double total = 0.0;
  for (double& w : weights) total += (w = rng.uniform(0.05, 1.0));

  DeltaDistribution d;
  double x = 0.0;
  for (int n = 0; n < N; ++n) {
    x += (n == 0 ? 0.5 * gap : gap) + slack * weights[static_cast<std::size_t>(n)] / total;
    d.poles.push_back({x, rng.polar(c.min_abs, c.max_abs)});
  }
  return d;
}

inline DiscreteSignal gen_signal(int N, std::uint64_t seed, double max_abs = 2.0) {
  if (N < 1) throw Error(ErrorCode::BadConstraints, "N must be at least 1");
  Rng rng(seed);
  DiscreteSignal s;
  for (int n = 0; n < N; ++n) s.u.push_back(rng.polar(0.0, max_abs));
  return s;
}

/// Positive gaps summing to one.
inline GapVector gen_gaps(int M, std::uint64_t seed) {
  if (M < 1) throw Error(ErrorCode::BadConstraints, "M must be at least 1");
  Rng rng(seed);
  GapVector g;
  double total = 0.0;
  for (int n = 0; n < M; ++n) {
    g.xi.push_back(rng.uniform(0.2, 1.0));
    total += g.xi.back();
  }
  for (double& x : g.xi) x /= total;
  return g;
}

}  // namespace nlft::io
