#pragma once

// Volume quadrature for radial integrands: N V_N \int_lo^hi r^{N-1} f(r) dr.
//
// Two routes share one panel scheme (Gauss-Legendre in log variables):
//  * evaluator route: f sampled inside panels; log substitution t = -log r on
//    (0,1] renders the logarithmic weights smooth, so accuracy is set by the
//    panel count, not the grid;
//  * sampled route: the piecewise-linear interpolant (linear in log r) of the
//    nodal values is integrated panel-exactly. This route coincides with the
//    fixed nodal weights from nodal_volume_weights(), which the energy
//    assembly reuses, keeping norms and energies mutually consistent.
//
// Below the innermost node the sampled route extends f by its first value;
// beyond the last node f is taken as zero.

#include <vector>

#include "adamslab/radial_function.hpp"

namespace adamslab {

// Volume of the unit N-ball.
double unit_ball_volume(int N);

// N V_N * integral of r^{N-1} f(r) over [lo, hi]. Requires 0 <= lo < hi.
double quad_radial(const RadialFunction& f, int N, double lo, double hi);

// Same integral with an extra pointwise factor g(r); evaluator route only
// composes g analytically, the sampled route multiplies the nodal values.
double quad_radial_weighted(const RadialFunction& f, int N, double lo,
                            double hi, const std::function<double(double)>& g);

// Evaluator route on a plain function, no grid involved; `panels` sets the
// resolution of each log-substituted segment.
double quad_radial_fn(const std::function<double(double)>& f, int N, double lo,
                      double hi, int panels = 256);

// Fixed nodal weights c_i with sum_i c_i f_i == sampled-route
// quad_radial(f, N, 0, R) for every nodal vector f.
std::vector<double> nodal_volume_weights(const RadialGrid& grid, int N);

}  // namespace adamslab
