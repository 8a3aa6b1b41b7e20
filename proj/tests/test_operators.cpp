#include "doctest.h"

#include <cmath>
#include <vector>

#include "adamslab/operators.hpp"
#include "adamslab/radial_grid.hpp"

using namespace adamslab;

namespace {

std::vector<double> sample(const RadialGrid& g, double (*f)(double)) {
  std::vector<double> u(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) u[i] = f(g.r[i]);
  return u;
}

}  // namespace

TEST_CASE("derivatives exact on quadratics") {
  const RadialGrid g = build_grid(4, 8.0, 128, 128);
  std::vector<double> u(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double r = g.r[i];
    u[i] = 3.0 - 2.0 * r + 0.5 * r * r;
  }
  const auto gr = gradient_radial(g, u);
  const auto la = laplacian_radial(g, u, 4);
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double r = g.r[i];
    CHECK(gr[i] == doctest::Approx(-2.0 + r).epsilon(1e-9));
    // lap = u'' + 3 u'/r = 1 + 3(-2 + r)/r; skip the origin end where the
    // 1/h^2 stencil amplifies round-off on the constant term
    if (r > 1e-3)
      CHECK(la[i] == doctest::Approx(1.0 + 3.0 * (-2.0 + r) / r).epsilon(1e-8));
  }
}

TEST_CASE("laplacian of r^2 is 2N at every node") {
  const RadialGrid g = build_grid(4, 8.0, 128, 128);
  const auto u = sample(g, +[](double r) { return r * r; });
  const auto la = laplacian_radial(g, u, 4);
  for (std::size_t i = 0; i < g.size(); ++i)
    CHECK(la[i] == doctest::Approx(8.0).epsilon(1e-9));
  const auto la6 = laplacian_radial(g, u, 6);
  CHECK(la6[g.size() / 2] == doctest::Approx(12.0).epsilon(1e-9));
}

TEST_CASE("gradient converges at order 2 on a gaussian") {
  double prev = 0.0;
  for (std::size_t n : {128u, 256u, 512u}) {
    const RadialGrid g = build_grid(4, 12.0, n, n);
    const auto u = sample(g, +[](double r) { return std::exp(-r * r); });
    const auto gr = gradient_radial(g, u);
    double err = 0.0;
    for (std::size_t i = 1; i + 1 < g.size(); ++i)
      err = std::max(err, std::abs(gr[i] + 2.0 * g.r[i] * u[i]));
    if (prev > 0.0) CHECK(std::log2(prev / err) > 1.9);
    prev = err;
  }
}

TEST_CASE("stencil rows reproduce the operators") {
  const RadialGrid g = build_grid(4, 6.0, 48, 48);
  const auto u = sample(g, +[](double r) { return std::sin(r) / (1.0 + r); });
  const auto gr = gradient_radial(g, u);
  const auto la = laplacian_radial(g, u, 4);
  const auto gs = gradient_stencil(g);
  const auto ls = laplacian_stencil(g, 4);
  REQUIRE(gs.size() == g.size());
  REQUIRE(ls.size() == g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    double sg = 0.0, sl = 0.0;
    for (int k = 0; k < 3; ++k) {
      sg += gs[i].coef[k] * u[gs[i].col[k]];
      sl += ls[i].coef[k] * u[ls[i].col[k]];
    }
    CHECK(sg == doctest::Approx(gr[i]).epsilon(1e-13));
    CHECK(sl == doctest::Approx(la[i]).epsilon(1e-13));
  }
}
