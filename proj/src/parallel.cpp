#include "sfwm/parallel.hpp"

#include <atomic>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace sfwm {

namespace {
std::atomic<int> g_threads{0};  // 0 = not set yet, resolve lazily to hardware
}

int hardware_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

int num_threads() {
  int t = g_threads.load(std::memory_order_relaxed);
  return t > 0 ? t : hardware_threads();
}

void set_num_threads(int n) {
  g_threads.store(n < 1 ? 1 : n, std::memory_order_relaxed);
#ifdef _OPENMP
  if (n >= 1) omp_set_num_threads(n);
#endif
}

}  // namespace sfwm
