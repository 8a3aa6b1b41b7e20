#pragma once

// Norm, exponential functional, and the concentration threshold on the
// weighted space E = { u radial : ||u||^{N/2} < inf } with
//
//   ||u||^{N/2} = int w |D2 u|^{N/2} + int |grad u|^{N/2} + int |u|^{N/2}.

#include <vector>

#include "adamslab/constants.hpp"
#include "adamslab/radial_function.hpp"
#include "adamslab/weight.hpp"

namespace adamslab {

struct NormBreakdown {
  double bilaplacian_w = 0.0;  // int w |lap u|^{N/2}
  double gradient = 0.0;       // int |u'|^{N/2}
  double lp = 0.0;             // int |u|^{N/2}
  double total = 0.0;          // sum of the three
  double norm(int N) const;    // total^{2/N}
};

// Uses the analytic evaluator when it carries derivatives; otherwise the
// finite-difference operators on the nodal values. The two routes agree to
// the discretization error of the coarser one.
NormBreakdown e_norm(const RadialFunction& u, const WeightSpec& w);

// int (e^{alpha |u|^gamma} - 1) over [lo, hi]. The integrand is evaluated
// with expm1; any pointwise exponent alpha |u|^gamma beyond `budget` raises
// the overflow flag and the value is clamped. The `series_terms` route
// re-evaluates the outer region r >= 1 through the power series
// sum_k alpha^k/k! int |u|^{gamma k}; the two routes agree to 1e-12 when
// neither overflows.
struct AdamsValue {
  double value = 0.0;
  double max_exponent = 0.0;
  bool overflow = false;
};
AdamsValue adams_functional(const RadialFunction& u, double alpha,
                            double gamma, int N, double lo, double hi,
                            double budget = 700.0);
// Outer part via the series (diagnostic route for the inner/outer split).
AdamsValue adams_functional_outer_series(const RadialFunction& u, double alpha,
                                         double gamma, int N,
                                         double budget = 700.0);

// Pointwise decay probe: sup over r >= 1 of
//   |u(r)| r^{2(N-1)/N} / ( |u|_{N/2}^{(N-2)/N} |grad u|_{N/2}^{2/N} ),
// the constant in the radial decay estimate. Scaling-invariant.
struct DecayCheck {
  double constant = 0.0;  // the supremum above
  double argmax_r = 0.0;
  std::vector<std::pair<double, double>> table;  // (r, ratio)
};
DecayCheck radial_decay_check(const RadialFunction& u, int N);

// Embedding ratios |u|_q / ||u||_E for q >= N/2 (the finite embeddings).
std::vector<std::pair<double, double>> embedding_probe(
    const RadialFunction& u, const WeightSpec& w,
    const std::vector<double>& q_list);

// Concentration threshold U(u) = (1 - ||u||^{N/2})^{-2 gamma / N} for
// ||u|| < 1; +inf (HUGE_VAL) at ||u|| >= 1.
double lions_threshold(double norm_u, const SobolevConstants& c);

}  // namespace adamslab
