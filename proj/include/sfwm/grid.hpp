#pragma once
#include <vector>

#include "sfwm/errors.hpp"

namespace sfwm {

// Uniformly sampled axis: coordinate(i) = origin + i*step for i = 0..n-1.
struct Axis {
  int n = 0;
  double step = 0.0;
  double origin = 0.0;

  double coord(int i) const { return origin + step * i; }
  double span() const { return step * n; }
  bool centered() const { return origin == -(n / 2) * step; }
  std::vector<double> coords() const {
    std::vector<double> x(n);
    for (int i = 0; i < n; ++i) x[i] = coord(i);
    return x;
  }
  bool operator==(const Axis&) const = default;
};

// Centered time axis: n even samples spanning `span`, t = 0 at index n/2.
inline Axis time_axis(int n, double span) {
  if (n < 2 || n % 2 != 0) throw ValidationError("axis size must be even and >= 2");
  if (!(span > 0.0)) throw ValidationError("axis span must be positive");
  const double dt = span / n;
  return Axis{n, dt, -(n / 2) * dt};
}

// Frequency axis conjugate to a time axis: dw = 2*pi/(n*dt), omega = 0 at index n/2.
Axis freq_axis(const Axis& t);

}  // namespace sfwm
