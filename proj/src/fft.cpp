#include "sfwm/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>

#include "sfwm/constants.hpp"
#include "sfwm/errors.hpp"

namespace sfwm::fft {

namespace {

// FFTW plan creation is not thread-safe; executions on new arrays are. Plans are
// made once per (n, sign) against a scratch buffer with FFTW_UNALIGNED so they can
// run in place on any caller buffer.
fftw_plan plan_for(int n, int sign) {
  static std::mutex mtx;
  static std::map<std::pair<int, int>, fftw_plan> cache;
  std::lock_guard<std::mutex> lock(mtx);
  auto key = std::make_pair(n, sign);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  std::vector<cd> scratch(n);
  auto* buf = reinterpret_cast<fftw_complex*>(scratch.data());
  fftw_plan p = fftw_plan_dft_1d(n, buf, buf, sign, FFTW_ESTIMATE | FFTW_UNALIGNED);
  if (!p) throw NumericError("FFTW plan creation failed");
  cache.emplace(key, p);
  return p;
}

}  // namespace

void raw_dft(cd* data, int n, int sign) {
  if (n <= 0) throw ValidationError("raw_dft: n must be positive");
  if (n == 1) return;
  fftw_plan p = plan_for(n, sign > 0 ? FFTW_BACKWARD : FFTW_FORWARD);
  auto* buf = reinterpret_cast<fftw_complex*>(data);
  fftw_execute_dft(p, buf, buf);
}

namespace {

void check_axes(const Axis& t, const Axis& w) {
  if (t.n != w.n) throw ValidationError("fft: time and frequency axes differ in size");
  // dual-grid consistency: n * dt * dw = 2pi
  const double prod = t.n * t.step * w.step;
  if (std::abs(prod / two_pi - 1.0) > 1e-12)
    throw ValidationError("fft: axes are not a conjugate pair (n*dt*dw != 2pi)");
}

}  // namespace

std::vector<cd> to_freq(const std::vector<cd>& a, const Axis& t, const Axis& w) {
  check_axes(t, w);
  const int n = t.n;
  if ((int)a.size() != n) throw ValidationError("to_freq: data size mismatch");
  std::vector<cd> out(n);
  for (int m = 0; m < n; ++m) out[m] = (m & 1) ? -a[m] : a[m];
  raw_dft(out.data(), n, +1);
  // boundary phase e^{+i w_k t0}; for centered axes w_k*t0 is an exact multiple of pi
  const bool cen = t.centered() && w.centered();
  for (int k = 0; k < n; ++k) {
    cd ph = cen ? cd(((k - n / 2) & 1) ? -1.0 : 1.0, 0.0)
                : std::polar(1.0, w.coord(k) * t.origin);
    out[k] *= t.step * ph;
  }
  return out;
}

std::vector<cd> to_time(const std::vector<cd>& ahat, const Axis& t, const Axis& w) {
  check_axes(t, w);
  const int n = t.n;
  if ((int)ahat.size() != n) throw ValidationError("to_time: data size mismatch");
  std::vector<cd> out(n);
  const bool cen = t.centered() && w.centered();
  for (int k = 0; k < n; ++k) {
    cd ph = cen ? cd(((k - n / 2) & 1) ? -1.0 : 1.0, 0.0)
                : std::polar(1.0, -w.coord(k) * t.origin);
    out[k] = ahat[k] * ph;
  }
  raw_dft(out.data(), n, -1);
  const double norm = w.step / two_pi;
  for (int m = 0; m < n; ++m) out[m] *= (m & 1) ? -norm : norm;
  return out;
}

}  // namespace sfwm::fft

namespace sfwm {

Axis freq_axis(const Axis& t) {
  if (t.n < 2 || t.n % 2 != 0) throw ValidationError("freq_axis: need even axis size");
  const double dw = two_pi / (t.n * t.step);
  return Axis{t.n, dw, -(t.n / 2) * dw};
}

}  // namespace sfwm
