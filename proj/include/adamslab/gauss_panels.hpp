#pragma once

// Composite Gauss-Legendre panels. Five abscissae per panel are enough for the
// smooth, log-substituted integrands used throughout; callers control accuracy
// through the panel count.

#include <cstddef>
#include <functional>

namespace adamslab {

// 5-point Gauss-Legendre rule on [-1, 1].
inline constexpr int kGaussPoints = 5;
inline constexpr double kGaussX[kGaussPoints] = {
    -0.90617984593866399280, -0.53846931010568309104, 0.0,
    0.53846931010568309104, 0.90617984593866399280};
inline constexpr double kGaussW[kGaussPoints] = {
    0.23692688505618908751, 0.47862867049936646804, 0.56888888888888888889,
    0.47862867049936646804, 0.23692688505618908751};

// Integrate f over [a, b] with `panels` equal panels, 5-point Gauss each.
template <class F>
double gauss_panels(F&& f, double a, double b, int panels) {
  if (panels < 1) panels = 1;
  const double h = (b - a) / panels;
  double sum = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double c = a + (p + 0.5) * h;
    double acc = 0.0;
    for (int q = 0; q < kGaussPoints; ++q)
      acc += kGaussW[q] * f(c + 0.5 * h * kGaussX[q]);
    sum += acc * 0.5 * h;
  }
  return sum;
}

}  // namespace adamslab
