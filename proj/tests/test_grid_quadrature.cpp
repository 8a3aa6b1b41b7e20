#include "doctest.h"

#include <cmath>
#include <memory>
#include <random>
#include <stdexcept>
#include <vector>

#include "adamslab/quadrature.hpp"
#include "adamslab/radial_function.hpp"
#include "adamslab/radial_grid.hpp"

using namespace adamslab;

namespace {

std::shared_ptr<const RadialGrid> grid_ptr(int N, double R, std::size_t inner,
                                           std::size_t outer) {
  return std::make_shared<RadialGrid>(build_grid(N, R, inner, outer));
}

}  // namespace

TEST_CASE("graded grid shape") {
  const RadialGrid g = build_grid(4, 8.0, 128, 128);
  CHECK(g.size() == 256);
  CHECK(g.inner_count == 128);
  CHECK(g.outer_count == 128);
  CHECK(g.r.front() == doctest::Approx(std::exp(-12.0)).epsilon(1e-14));
  CHECK(g.r.back() == 8.0);
  CHECK(g.r[g.inner_count] == doctest::Approx(1.0).epsilon(1e-14));
  for (std::size_t i = 0; i + 1 < g.size(); ++i) CHECK(g.r[i] < g.r[i + 1]);
  for (std::size_t i = 0; i < g.inner_count; ++i) CHECK(g.r[i] < 1.0);
  // inner nodes uniform in -log r
  const double dt0 = std::log(g.r[1] / g.r[0]);
  const double dt1 = std::log(g.r[64] / g.r[63]);
  CHECK(dt0 == doctest::Approx(dt1).epsilon(1e-12));
}

TEST_CASE("grid argument validation") {
  CHECK_THROWS_AS(build_grid(4, 0.5, 128, 128), std::invalid_argument);
  CHECK_THROWS_AS(build_grid(4, 8.0, 4, 128), std::invalid_argument);
  CHECK_THROWS_AS(build_grid(4, 8.0, 128, 4), std::invalid_argument);
  CHECK_THROWS_AS(build_grid(3, 8.0, 128, 128), std::invalid_argument);
  CHECK_THROWS_AS(build_grid(2, 8.0, 128, 128), std::invalid_argument);
  CHECK_THROWS_AS(build_grid(4, 8.0, 128, 128, -1.0), std::invalid_argument);
}

TEST_CASE("unit ball volumes") {
  CHECK(unit_ball_volume(2) == doctest::Approx(M_PI).epsilon(1e-15));
  CHECK(unit_ball_volume(4) ==
        doctest::Approx(M_PI * M_PI / 2.0).epsilon(1e-15));
  CHECK(unit_ball_volume(6) ==
        doctest::Approx(std::pow(M_PI, 3) / 6.0).epsilon(1e-15));
}

TEST_CASE("gaussian volume integral, evaluator route") {
  // int exp(-r^2) over R^4 = pi^2; R = 12 truncates below double precision
  auto g = grid_ptr(4, 12.0, 256, 256);
  RadialEvaluator ev;
  ev.value = [](double r) { return std::exp(-r * r); };
  const double q = quad_radial(sample_on_grid(g, ev), 4, 0.0, g->R);
  CHECK(q == doctest::Approx(M_PI * M_PI).epsilon(1e-10));
}

TEST_CASE("sampled route converges at order 2") {
  const double exact = M_PI * M_PI;
  double prev = 0.0;
  for (std::size_t n : {128u, 256u, 512u}) {
    auto g = grid_ptr(4, 12.0, n, n);
    std::vector<double> u(g->size());
    for (std::size_t i = 0; i < g->size(); ++i)
      u[i] = std::exp(-g->r[i] * g->r[i]);
    const double err =
        std::abs(quad_radial(from_values(g, u), 4, 0.0, g->R) - exact) / exact;
    if (prev > 0.0) CHECK(std::log2(prev / err) > 1.9);
    prev = err;
  }
}

TEST_CASE("nodal weights reproduce the sampled route") {
  auto g = grid_ptr(4, 8.0, 96, 96);
  const std::vector<double> c = nodal_volume_weights(*g, 4);
  REQUIRE(c.size() == g->size());
  for (double ci : c) CHECK(ci > 0.0);

  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<double> f(g->size());
  for (double& v : f) v = dist(rng);
  double dot = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) dot += c[i] * f[i];
  const double q = quad_radial(from_values(g, f), 4, 0.0, g->R);
  CHECK(dot == doctest::Approx(q).epsilon(1e-12));
}

TEST_CASE("quadrature additivity and weighted consistency") {
  auto g = grid_ptr(4, 8.0, 96, 96);
  std::vector<double> u(g->size());
  for (std::size_t i = 0; i < g->size(); ++i) u[i] = 1.0 / (1.0 + g->r[i]);
  const RadialFunction f = from_values(g, u);
  const double whole = quad_radial(f, 4, 0.0, g->R);
  const double split =
      quad_radial(f, 4, 0.0, 1.0) + quad_radial(f, 4, 1.0, g->R);
  CHECK(whole == doctest::Approx(split).epsilon(1e-12));

  const double wq =
      quad_radial_weighted(f, 4, 0.0, g->R, [](double) { return 1.0; });
  CHECK(wq == doctest::Approx(whole).epsilon(1e-12));
}

TEST_CASE("grid-free quadrature of plain functions") {
  // N V_N int_0^1 r^3 dr = V_4
  const double v = quad_radial_fn([](double) { return 1.0; }, 4, 0.0, 1.0);
  CHECK(v == doctest::Approx(M_PI * M_PI / 2.0).epsilon(1e-12));
  CHECK_THROWS_AS(quad_radial_fn([](double) { return 1.0; }, 4, -1.0, 1.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(quad_radial_fn([](double) { return 1.0; }, 4, 2.0, 1.0),
                  std::invalid_argument);
}
