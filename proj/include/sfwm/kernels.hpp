#pragma once
#include <complex>

#include "sfwm/grid.hpp"

// Hot loops of the library. Each kernel has an OpenMP twin and a serial reference
// implementation; the dispatch wrapper picks by sfwm::num_threads(). Parallelism is
// over independent rows/columns with row-local arithmetic order, so both paths give
// bit-identical results (asserted in the parallel test).

namespace sfwm::kernels {

using cd = std::complex<double>;

enum class Dir { TimeToFreq, FreqToTime };

// Continuum transform along each row (contiguous, length t.n) of an nrows-row
// array whose rows start ld elements apart.
void transform_rows_serial(cd* a, int nrows, int ld, const Axis& t, const Axis& w, Dir dir);
void transform_rows_omp(cd* a, int nrows, int ld, const Axis& t, const Axis& w, Dir dir);
void transform_rows(cd* a, int nrows, int ld, const Axis& t, const Axis& w, Dir dir);

// Continuum transform along each of ncols columns (length t.n, element stride ld).
void transform_cols_serial(cd* a, int ncols, int ld, const Axis& t, const Axis& w, Dir dir);
void transform_cols_omp(cd* a, int ncols, int ld, const Axis& t, const Axis& w, Dir dir);
void transform_cols(cd* a, int ncols, int ld, const Axis& t, const Axis& w, Dir dir);

// Rank-one deposit against a circulant kernel:
//   y[m*ld + n] += coeff * K[(m - n + N) % N] * P[m] * Q[n]   for all m, n < N.
void deposit_circulant_serial(cd* y, int n, int ld, const cd* K, const cd* P,
                              const cd* Q, cd coeff);
void deposit_circulant_omp(cd* y, int n, int ld, const cd* K, const cd* P,
                           const cd* Q, cd coeff);
void deposit_circulant(cd* y, int n, int ld, const cd* K, const cd* P, const cd* Q,
                       cd coeff);

// Separable pointwise scaling: y[m*ld + n] *= a[m] * b[n].
void scale_outer_serial(cd* y, int nrows, int ncols, int ld, const cd* a, const cd* b);
void scale_outer_omp(cd* y, int nrows, int ncols, int ld, const cd* a, const cd* b);
void scale_outer(cd* y, int nrows, int ncols, int ld, const cd* a, const cd* b);

}  // namespace sfwm::kernels
