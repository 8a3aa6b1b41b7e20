#include "adamslab/radial_grid.hpp"

#include <cmath>
#include <stdexcept>

namespace adamslab {

RadialGrid build_grid(int N, double R, std::size_t inner_count,
                      std::size_t outer_count, double t_max) {
  if (N < 4 || N % 2 != 0)
    throw std::invalid_argument("build_grid: N must be even and >= 4");
  if (!(R > 1.0)) throw std::invalid_argument("build_grid: R must exceed 1");
  if (inner_count < 8 || outer_count < 8)
    throw std::invalid_argument("build_grid: counts must be >= 8");
  if (!(t_max > 0.0)) throw std::invalid_argument("build_grid: t_max <= 0");

  RadialGrid g;
  g.R = R;
  g.inner_count = inner_count;
  g.outer_count = outer_count;
  g.r.reserve(inner_count + outer_count);

  // inner: t = -log r uniform, t = t_max down to t_max/inner_count, so the
  // coarsest inner spacing matches onto r = 1
  const double h = t_max / static_cast<double>(inner_count);
  for (std::size_t j = inner_count; j >= 1; --j)
    g.r.push_back(std::exp(-h * static_cast<double>(j)));

  // outer: geometric from 1 to R inclusive
  const double lR = std::log(R);
  for (std::size_t k = 0; k < outer_count; ++k) {
    const double s = lR * static_cast<double>(k) /
                     static_cast<double>(outer_count - 1);
    g.r.push_back(k + 1 == outer_count ? R : std::exp(s));
  }
  return g;
}

}  // namespace adamslab
