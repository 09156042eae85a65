#include "sfwm/kernels.hpp"

#include <vector>

#include "sfwm/constants.hpp"
#include "sfwm/errors.hpp"
#include "sfwm/fft.hpp"
#include "sfwm/parallel.hpp"

namespace sfwm::kernels {

namespace {

// Boundary phases shared by every row/column of a batch. For centered axes the
// phase collapses to an exact sign; otherwise it is a unit complex number.
std::vector<cd> boundary_phase(const Axis& t, const Axis& w, Dir dir) {
  const int n = t.n;
  std::vector<cd> ph(n);
  if (t.centered() && w.centered()) {
    for (int k = 0; k < n; ++k) ph[k] = ((k - n / 2) & 1) ? -1.0 : 1.0;
  } else {
    const double sgn = (dir == Dir::TimeToFreq) ? 1.0 : -1.0;
    for (int k = 0; k < n; ++k) ph[k] = std::polar(1.0, sgn * w.coord(k) * t.origin);
  }
  return ph;
}

// One strided span, in place; `scratch` holds t.n elements when stride != 1.
void transform_span(cd* base, int stride, const Axis& t, const Axis& w, Dir dir,
                    const std::vector<cd>& ph, cd* scratch) {
  const int n = t.n;
  cd* v = base;
  if (stride != 1) {
    for (int i = 0; i < n; ++i) scratch[i] = base[(size_t)i * stride];
    v = scratch;
  }
  if (dir == Dir::TimeToFreq) {
    for (int m = 1; m < n; m += 2) v[m] = -v[m];
    fft::raw_dft(v, n, +1);
    for (int k = 0; k < n; ++k) v[k] *= t.step * ph[k];
  } else {
    for (int k = 0; k < n; ++k) v[k] *= ph[k];
    fft::raw_dft(v, n, -1);
    const double norm = w.step / two_pi;
    for (int m = 0; m < n; ++m) v[m] *= (m & 1) ? -norm : norm;
  }
  if (stride != 1) {
    for (int i = 0; i < n; ++i) base[(size_t)i * stride] = v[i];
  }
}

void check_pair(const Axis& t, const Axis& w) {
  if (t.n != w.n || std::abs(t.n * t.step * w.step / two_pi - 1.0) > 1e-12)
    throw ValidationError("kernels: axes are not a conjugate pair");
}

}  // namespace

void transform_rows_serial(cd* a, int nrows, int ld, const Axis& t, const Axis& w,
                           Dir dir) {
  check_pair(t, w);
  const auto ph = boundary_phase(t, w, dir);
  for (int r = 0; r < nrows; ++r)
    transform_span(a + (size_t)r * ld, 1, t, w, dir, ph, nullptr);
}

void transform_rows_omp(cd* a, int nrows, int ld, const Axis& t, const Axis& w,
                        Dir dir) {
  check_pair(t, w);
  const auto ph = boundary_phase(t, w, dir);
#pragma omp parallel for schedule(static)
  for (int r = 0; r < nrows; ++r)
    transform_span(a + (size_t)r * ld, 1, t, w, dir, ph, nullptr);
}

void transform_rows(cd* a, int nrows, int ld, const Axis& t, const Axis& w, Dir dir) {
  if (num_threads() > 1)
    transform_rows_omp(a, nrows, ld, t, w, dir);
  else
    transform_rows_serial(a, nrows, ld, t, w, dir);
}

void transform_cols_serial(cd* a, int ncols, int ld, const Axis& t, const Axis& w,
                           Dir dir) {
  check_pair(t, w);
  const auto ph = boundary_phase(t, w, dir);
  std::vector<cd> scratch(t.n);
  for (int c = 0; c < ncols; ++c)
    transform_span(a + c, ld, t, w, dir, ph, scratch.data());
}

void transform_cols_omp(cd* a, int ncols, int ld, const Axis& t, const Axis& w,
                        Dir dir) {
  check_pair(t, w);
  const auto ph = boundary_phase(t, w, dir);
#pragma omp parallel
  {
    std::vector<cd> scratch(t.n);
#pragma omp for schedule(static)
    for (int c = 0; c < ncols; ++c)
      transform_span(a + c, ld, t, w, dir, ph, scratch.data());
  }
}

void transform_cols(cd* a, int ncols, int ld, const Axis& t, const Axis& w, Dir dir) {
  if (num_threads() > 1)
    transform_cols_omp(a, ncols, ld, t, w, dir);
  else
    transform_cols_serial(a, ncols, ld, t, w, dir);
}

namespace {

// Row m of the deposit, with the circular index (m - n + N) % N unrolled into two
// contiguous reverse scans so the inner loop carries no modulo.
inline void deposit_row(cd* row, int m, int n, const cd* K, const cd* Q, cd wm) {
  for (int j = 0; j <= m; ++j) row[j] += wm * K[m - j] * Q[j];
  for (int j = m + 1; j < n; ++j) row[j] += wm * K[m - j + n] * Q[j];
}

}  // namespace

void deposit_circulant_serial(cd* y, int n, int ld, const cd* K, const cd* P,
                              const cd* Q, cd coeff) {
  for (int m = 0; m < n; ++m)
    deposit_row(y + (size_t)m * ld, m, n, K, Q, coeff * P[m]);
}

void deposit_circulant_omp(cd* y, int n, int ld, const cd* K, const cd* P,
                           const cd* Q, cd coeff) {
#pragma omp parallel for schedule(static)
  for (int m = 0; m < n; ++m)
    deposit_row(y + (size_t)m * ld, m, n, K, Q, coeff * P[m]);
}

void deposit_circulant(cd* y, int n, int ld, const cd* K, const cd* P, const cd* Q,
                       cd coeff) {
  if (num_threads() > 1)
    deposit_circulant_omp(y, n, ld, K, P, Q, coeff);
  else
    deposit_circulant_serial(y, n, ld, K, P, Q, coeff);
}

void scale_outer_serial(cd* y, int nrows, int ncols, int ld, const cd* a, const cd* b) {
  for (int m = 0; m < nrows; ++m) {
    cd* row = y + (size_t)m * ld;
    const cd am = a[m];
    for (int j = 0; j < ncols; ++j) row[j] *= am * b[j];
  }
}

void scale_outer_omp(cd* y, int nrows, int ncols, int ld, const cd* a, const cd* b) {
#pragma omp parallel for schedule(static)
  for (int m = 0; m < nrows; ++m) {
    cd* row = y + (size_t)m * ld;
    const cd am = a[m];
    for (int j = 0; j < ncols; ++j) row[j] *= am * b[j];
  }
}

void scale_outer(cd* y, int nrows, int ncols, int ld, const cd* a, const cd* b) {
  if (num_threads() > 1)
    scale_outer_omp(y, nrows, ncols, ld, a, b);
  else
    scale_outer_serial(y, nrows, ncols, ld, a, b);
}

}  // namespace sfwm::kernels
