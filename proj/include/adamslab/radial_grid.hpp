#pragma once

// Graded radial grids for fourth-order problems on [0, R].
//
// The inner segment (0, 1] is uniform in t = -log r so that the logarithmic
// weight and concentration profiles are resolved near the origin; the outer
// segment [1, R] is geometric. No node sits at r = 0: operators take the
// origin limit analytically.

#include <cstddef>
#include <vector>

namespace adamslab {

struct RadialGrid {
  std::vector<double> r;   // strictly increasing, r.front() > 0 unless hand-built
  double R = 0.0;          // outer radius, r.back() == R
  std::size_t inner_count = 0;  // nodes with r < 1
  std::size_t outer_count = 0;  // nodes with r >= 1

  std::size_t size() const { return r.size(); }
};

// Build a grid with `inner_count` nodes log-uniform on (0, 1) (innermost node
// at exp(-t_max)) and `outer_count` nodes geometric on [1, R].
//
// Requires N >= 4 even, R > 1, inner_count >= 8, outer_count >= 8, t_max > 0.
RadialGrid build_grid(int N, double R, std::size_t inner_count,
                      std::size_t outer_count, double t_max = 12.0);

}  // namespace adamslab
