#pragma once

// Global thread count for the hot kernels. A value of 1 routes through the serial
// reference implementations; >1 selects the OpenMP twins (identical arithmetic
// order per row, so results are bit-identical either way — tested).

namespace sfwm {

int num_threads();
void set_num_threads(int n);
int hardware_threads();

}  // namespace sfwm
