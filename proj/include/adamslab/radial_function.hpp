#pragma once

// Radial functions: nodal samples on a RadialGrid, optionally backed by an
// analytic evaluator. Quadrature and norms use the evaluator when it carries
// derivatives; otherwise they fall back to the nodal samples.

#include <functional>
#include <memory>
#include <vector>

#include "adamslab/radial_grid.hpp"

namespace adamslab {

struct RadialEvaluator {
  std::function<double(double)> value;   // u(r)
  std::function<double(double)> deriv;   // u'(r), optional
  std::function<double(double)> deriv2;  // u''(r), optional

  bool has_derivatives() const { return bool(deriv) && bool(deriv2); }
};

struct RadialFunction {
  std::shared_ptr<const RadialGrid> grid;
  std::vector<double> values;  // one per node
  RadialEvaluator eval;        // optional; empty functions when absent

  bool has_evaluator() const { return bool(eval.value); }
};

// Sample an evaluator onto a grid.
RadialFunction sample_on_grid(std::shared_ptr<const RadialGrid> grid,
                              const RadialEvaluator& ev);

// Nodal samples only (values are copied; no evaluator attached).
RadialFunction from_values(std::shared_ptr<const RadialGrid> grid,
                           std::vector<double> values);

}  // namespace adamslab
