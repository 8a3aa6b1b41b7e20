#include "doctest.h"

#include <cmath>
#include <memory>
#include <stdexcept>
#include <vector>

#include "adamslab/constants.hpp"
#include "adamslab/functional.hpp"
#include "adamslab/quadrature.hpp"
#include "adamslab/radial_function.hpp"
#include "adamslab/radial_grid.hpp"
#include "adamslab/weight.hpp"

using namespace adamslab;

namespace {

std::shared_ptr<const RadialGrid> grid_ptr(double R, std::size_t n) {
  return std::make_shared<RadialGrid>(build_grid(4, R, n, n));
}

// C^1 bump (1 - r^2)^2 on [0, 1]; lap = 24 r^2 - 16 at N = 4
RadialEvaluator bump_eval() {
  RadialEvaluator ev;
  ev.value = [](double r) {
    if (r >= 1.0) return 0.0;
    const double s = 1.0 - r * r;
    return s * s;
  };
  ev.deriv = [](double r) {
    return r >= 1.0 ? 0.0 : -4.0 * r * (1.0 - r * r);
  };
  ev.deriv2 = [](double r) { return r >= 1.0 ? 0.0 : 12.0 * r * r - 4.0; };
  return ev;
}

RadialEvaluator exp_eval() {
  RadialEvaluator ev;
  ev.value = [](double r) { return std::exp(-r); };
  ev.deriv = [](double r) { return -std::exp(-r); };
  ev.deriv2 = [](double r) { return std::exp(-r); };
  return ev;
}

RadialEvaluator gauss_eval() {
  RadialEvaluator ev;
  ev.value = [](double r) { return std::exp(-r * r); };
  ev.deriv = [](double r) { return -2.0 * r * std::exp(-r * r); };
  ev.deriv2 = [](double r) { return (4.0 * r * r - 2.0) * std::exp(-r * r); };
  return ev;
}

}  // namespace

TEST_CASE("logarithmic weight volume over the unit ball") {
  WeightSpec w;
  const double v = quad_radial_fn(
      [&](double r) { return weight_eval(w, r); }, 4, 0.0, 1.0);
  CHECK(v == doctest::Approx(5.49327012614047283).epsilon(1e-10));
}

TEST_CASE("norm breakdown of the bump") {
  WeightSpec w;
  auto g = grid_ptr(8.0, 128);
  const RadialFunction u = sample_on_grid(g, bump_eval());
  const NormBreakdown nb = e_norm(u, w);
  CHECK(nb.bilaplacian_w ==
        doctest::Approx(188.768557626047403).epsilon(1e-9));
  CHECK(nb.gradient ==
        doctest::Approx(8.0 * M_PI * M_PI / 15.0).epsilon(1e-9));
  CHECK(nb.lp == doctest::Approx(M_PI * M_PI / 30.0).epsilon(1e-9));
  CHECK(nb.total == doctest::Approx(194.361333453331373).epsilon(1e-9));
  CHECK(nb.total ==
        doctest::Approx(nb.bilaplacian_w + nb.gradient + nb.lp).epsilon(1e-15));
  CHECK(nb.norm(4) == doctest::Approx(std::sqrt(nb.total)).epsilon(1e-15));
}

TEST_CASE("norm routes agree and refinement is stable") {
  WeightSpec w;
  const double eval_total = e_norm(sample_on_grid(grid_ptr(8.0, 256),
                                                  gauss_eval()), w).total;
  double prev = 0.0;
  for (std::size_t n : {256u, 512u}) {
    auto g = grid_ptr(8.0, n);
    const RadialFunction ue = sample_on_grid(g, gauss_eval());
    const double nodal = e_norm(from_values(g, ue.values), w).total;
    CHECK(std::abs(nodal - eval_total) / eval_total < 1e-4);
    if (prev > 0.0) CHECK(std::abs(nodal - prev) / prev < 1e-4);
    prev = nodal;
  }
}

TEST_CASE("exponential functional of the bump") {
  auto g = grid_ptr(8.0, 128);
  const RadialFunction u = sample_on_grid(g, bump_eval());
  const AdamsValue a = adams_functional(u, 0.01, 4.0, 4, 0.0, 1.0);
  CHECK(a.value == doctest::Approx(0.00109823792602760514).epsilon(1e-9));
  CHECK(a.max_exponent == doctest::Approx(0.01).epsilon(1e-12));
  CHECK_FALSE(a.overflow);

  const AdamsValue big = adams_functional(u, 800.0, 4.0, 4, 0.0, 1.0);
  CHECK(big.overflow);
  CHECK(std::isfinite(big.value));
  CHECK(big.max_exponent > 700.0);
}

TEST_CASE("outer series route agrees with direct evaluation") {
  auto g = grid_ptr(8.0, 128);
  const RadialFunction u = sample_on_grid(g, exp_eval());
  const AdamsValue direct = adams_functional(u, 0.5, 4.0, 4, 1.0, g->R);
  const AdamsValue series = adams_functional_outer_series(u, 0.5, 4.0, 4);
  CHECK(direct.value == doctest::Approx(series.value).epsilon(1e-12));
  CHECK_FALSE(direct.overflow);
  CHECK_FALSE(series.overflow);
}

TEST_CASE("radial decay constant of exp(-r)") {
  // sup of e^{-r} r^{3/2} over r >= 1 sits at r = 3/2 and both norms equal
  // sqrt(3 pi^2 / 4), giving e^{-3/2} (3/2)^{3/2} / sqrt(3 pi^2 / 4)
  auto g = std::make_shared<RadialGrid>(build_grid(4, 12.0, 512, 512));
  const RadialFunction u = sample_on_grid(g, exp_eval());
  const DecayCheck dc = radial_decay_check(u, 4);
  CHECK(dc.constant == doctest::Approx(0.15066579285628462).epsilon(2e-4));
  CHECK(std::abs(dc.argmax_r - 1.5) < 0.01);
  REQUIRE(!dc.table.empty());
  for (const auto& [r, ratio] : dc.table) {
    CHECK(r >= 1.0);
    CHECK(ratio <= dc.constant * (1.0 + 1e-15));
  }

  // the ratio is scaling invariant
  std::vector<double> scaled = u.values;
  for (double& v : scaled) v *= 5.0;
  const DecayCheck dc5 = radial_decay_check(from_values(g, scaled), 4);
  const DecayCheck dc1 = radial_decay_check(from_values(g, u.values), 4);
  CHECK(dc5.constant == doctest::Approx(dc1.constant).epsilon(1e-13));

  std::vector<double> zero(g->size(), 0.0);
  CHECK_THROWS_AS(radial_decay_check(from_values(g, zero), 4),
                  std::invalid_argument);
}

TEST_CASE("embedding ratios") {
  WeightSpec w;
  auto g = grid_ptr(8.0, 128);
  const RadialFunction u = sample_on_grid(g, gauss_eval());
  const auto rows = embedding_probe(u, w, {2.0, 4.0, 8.0});
  REQUIRE(rows.size() == 3);
  for (const auto& [q, ratio] : rows) {
    CHECK(ratio > 0.0);
    CHECK(std::isfinite(ratio));
  }

  RadialFunction u3 = u;
  for (double& v : u3.values) v *= 3.0;
  RadialEvaluator ev3 = gauss_eval();
  auto base = ev3.value;
  ev3.value = [base](double r) { return 3.0 * base(r); };
  auto based = ev3.deriv;
  ev3.deriv = [based](double r) { return 3.0 * based(r); };
  auto based2 = ev3.deriv2;
  ev3.deriv2 = [based2](double r) { return 3.0 * based2(r); };
  const auto rows3 = embedding_probe(sample_on_grid(g, ev3), w, {2.0, 4.0});
  CHECK(rows3[0].second == doctest::Approx(rows[0].second).epsilon(1e-12));
  CHECK(rows3[1].second == doctest::Approx(rows[1].second).epsilon(1e-12));

  CHECK_THROWS_AS(embedding_probe(u, w, {1.9}), std::invalid_argument);
  std::vector<double> zero(g->size(), 0.0);
  CHECK_THROWS_AS(embedding_probe(from_values(g, zero), w, {2.0}),
                  std::invalid_argument);
}

TEST_CASE("concentration threshold") {
  const SobolevConstants c = constants(4, 0.5);
  // (1 - norm^2)^{-2} at N = 4, gamma = 4
  CHECK(lions_threshold(0.5, c) == doctest::Approx(16.0 / 9.0).epsilon(1e-14));
  CHECK(lions_threshold(0.0, c) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(std::isinf(lions_threshold(1.0, c)));
  CHECK(std::isinf(lions_threshold(1.5, c)));
  CHECK_THROWS_AS((void)lions_threshold(-0.1, c), std::invalid_argument);
}
