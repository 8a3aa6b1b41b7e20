#pragma once

// Finite-difference radial operators on nonuniform grids.
//
// Three-point stencils exact on quadratics; one-sided at the ends. The radial
// Laplacian is u'' + (N-1) u'/r, with the origin limit N u''(0) if a node
// ever sits at r = 0.

#include <vector>

#include "adamslab/radial_function.hpp"

namespace adamslab {

// First derivative at every node.
std::vector<double> gradient_radial(const RadialGrid& grid,
                                    const std::vector<double>& values);

// u'' + (N-1) u'/r at every node.
std::vector<double> laplacian_radial(const RadialGrid& grid,
                                     const std::vector<double>& values, int N);

// Stencil rows as sparse triplets (column index, coefficient), three entries
// per row; used by the energy assembly to differentiate through the
// operators exactly.
struct StencilRow {
  int col[3];
  double coef[3];
};
std::vector<StencilRow> gradient_stencil(const RadialGrid& grid);
std::vector<StencilRow> laplacian_stencil(const RadialGrid& grid, int N);

}  // namespace adamslab
