#pragma once

// Discrete Fourier transform with the convention
//   F[v](z) = sum_l v_l e^{-2 pi i l z / N},   F^{-1}[w](l) = (1/N) sum_z w_z e^{2 pi i l z / N}.
// Backed by FFTW. Plan creation in FFTW is not thread-safe, so concurrent callers
// must serialize.

#include <fftw3.h>

#include <memory>
#include <span>
#include <vector>

#include "nlft/su2.hpp"

namespace nlft {

namespace detail {

struct PlanDeleter {
  void operator()(fftw_plan_s* p) const noexcept { fftw_destroy_plan(p); }
};

inline std::vector<Complex> fftw_transform(std::span<const Complex> in, int sign) {
  std::vector<Complex> buf(in.begin(), in.end());
  if (buf.empty()) return buf;
  auto* data = reinterpret_cast<fftw_complex*>(buf.data());
  std::unique_ptr<fftw_plan_s, PlanDeleter> plan(
      fftw_plan_dft_1d(static_cast<int>(buf.size()), data, data, sign, FFTW_ESTIMATE));
  fftw_execute(plan.get());
  return buf;
}

}  // namespace detail

inline std::vector<Complex> dft(std::span<const Complex> v) { return detail::fftw_transform(v, FFTW_FORWARD); }

inline std::vector<Complex> idft(std::span<const Complex> w) {
  std::vector<Complex> out = detail::fftw_transform(w, FFTW_BACKWARD);
  const double scale = 1.0 / static_cast<double>(out.size());
  for (Complex& c : out) c *= scale;
  return out;
}

}  // namespace nlft
