#include "adamslab/radial_function.hpp"

#include <cmath>
#include <stdexcept>

namespace adamslab {

RadialFunction sample_on_grid(std::shared_ptr<const RadialGrid> grid,
                              const RadialEvaluator& ev) {
  if (!grid) throw std::invalid_argument("sample_on_grid: null grid");
  if (!ev.value) throw std::invalid_argument("sample_on_grid: empty evaluator");
  RadialFunction f;
  f.grid = std::move(grid);
  f.values.reserve(f.grid->size());
  for (double r : f.grid->r) {
    const double v = ev.value(r);
    if (!std::isfinite(v))
      throw std::invalid_argument("sample_on_grid: non-finite sample");
    f.values.push_back(v);
  }
  f.eval = ev;
  return f;
}

RadialFunction from_values(std::shared_ptr<const RadialGrid> grid,
                           std::vector<double> values) {
  if (!grid) throw std::invalid_argument("from_values: null grid");
  if (values.size() != grid->size())
    throw std::invalid_argument("from_values: size mismatch");
  for (double v : values)
    if (!std::isfinite(v))
      throw std::invalid_argument("from_values: non-finite value");
  RadialFunction f;
  f.grid = std::move(grid);
  f.values = std::move(values);
  return f;
}

}  // namespace adamslab
