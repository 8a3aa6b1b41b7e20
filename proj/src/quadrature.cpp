#include "adamslab/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "adamslab/gauss_panels.hpp"

namespace adamslab {
namespace {

// phi0(z) = int_0^1 e^{zs} ds, phi1(z) = int_0^1 s e^{zs} ds. The series
// branches avoid the cancellation in the closed forms near z = 0.
double phi0(double z) {
  if (std::abs(z) < 1e-4) return 1.0 + z * (0.5 + z * (1.0 / 6.0));
  return std::expm1(z) / z;
}

double phi1(double z) {
  if (std::abs(z) < 0.5) {
    double term = 1.0, sum = 0.0;
    for (int k = 0; k < 18; ++k) {
      sum += term / (k + 2);
      term *= z / (k + 1);
    }
    return sum;
  }
  return (std::exp(z) * (z - 1.0) + 1.0) / (z * z);
}

// Exact integral of e^{Nx} f(x) over [xa, xb] for f linear in x with values
// fa, fb at the ends (x = log r, so this is r^{N-1} f dr in log variables).
double segment_linear(double xa, double xb, double fa, double fb, int N) {
  const double h = xb - xa;
  if (h <= 0.0) return 0.0;
  const double z = N * h;
  return std::exp(N * xa) * h * (fa * (phi0(z) - phi1(z)) + fb * phi1(z));
}

// int_lo^hi r^{N-1} val(r) dr by composite Gauss panels, split at r = 1.
// Inner segment in u = log(1 + t), t = -log r: resolves both the unit scale
// and deep concentration; outer segment in s = log r.
template <class Val>
double eval_route(Val&& val, int N, double lo, double hi, int inner_panels,
                  int outer_panels) {
  double total = 0.0;
  const double hi_in = std::min(hi, 1.0);
  if (lo < hi_in) {
    // t ranges over [-log hi_in, -log lo]; cap the upper end where e^{-Nt}
    // annihilates any double-range integrand
    const double t_small = -std::log(hi_in);
    const double t_big = lo > 0.0 ? -std::log(lo) : 400.0;
    auto g = [&](double u) {
      const double t = std::expm1(u);
      const double w = std::exp(-N * t + u);  // e^{-Nt} dt/du
      if (w == 0.0) return 0.0;
      return w * val(std::exp(-t));
    };
    total += gauss_panels(g, std::log1p(t_small), std::log1p(t_big),
                          inner_panels);
  }
  const double lo_out = std::max(lo, 1.0);
  if (lo_out < hi) {
    auto g = [&](double s) { return std::exp(N * s) * val(std::exp(s)); };
    total += gauss_panels(g, std::log(lo_out), std::log(hi), outer_panels);
  }
  return total;
}

// Piecewise linear-in-log-r interpolant integrated segment-exactly; constant
// extension below the first node, zero beyond the last.
double sampled_route(const RadialGrid& g, const std::vector<double>& v, int N,
                     double lo, double hi) {
  double acc = 0.0;
  const double b0 = std::min(hi, g.r.front());
  if (lo < b0)
    acc += v.front() * (std::pow(b0, N) - std::pow(lo, N)) / N;
  for (std::size_t i = 0; i + 1 < g.r.size(); ++i) {
    const double ra = std::max(lo, g.r[i]);
    const double rb = std::min(hi, g.r[i + 1]);
    if (ra >= rb) continue;
    const double xi = std::log(g.r[i]), xj = std::log(g.r[i + 1]);
    const double xa = std::log(ra), xb = std::log(rb);
    const double slope = (v[i + 1] - v[i]) / (xj - xi);
    const double fa = v[i] + slope * (xa - xi);
    const double fb = v[i] + slope * (xb - xi);
    acc += segment_linear(xa, xb, fa, fb, N);
  }
  return acc;
}

int inner_panels_for(const RadialGrid& g) {
  return std::max<int>(64, static_cast<int>(g.inner_count));
}
int outer_panels_for(const RadialGrid& g) {
  return std::max<int>(64, static_cast<int>(g.outer_count));
}

void check_bounds(double lo, double hi) {
  if (!(lo >= 0.0) || !(lo < hi))
    throw std::invalid_argument("quad_radial: need 0 <= lo < hi");
}

double finish(double value) {
  if (!std::isfinite(value))
    throw std::runtime_error("quad_radial: non-finite integral");
  return value;
}

}  // namespace

double unit_ball_volume(int N) {
  if (N < 1) throw std::invalid_argument("unit_ball_volume: N < 1");
  const double pi = 3.14159265358979323846;
  return std::pow(pi, N / 2.0) / std::tgamma(N / 2.0 + 1.0);
}

double quad_radial(const RadialFunction& f, int N, double lo, double hi) {
  check_bounds(lo, hi);
  if (!f.grid) throw std::invalid_argument("quad_radial: no grid");
  const double NV = N * unit_ball_volume(N);
  if (f.has_evaluator())
    return finish(NV * eval_route([&](double r) { return f.eval.value(r); }, N,
                                  lo, hi, inner_panels_for(*f.grid),
                                  outer_panels_for(*f.grid)));
  return finish(NV * sampled_route(*f.grid, f.values, N, lo, hi));
}

double quad_radial_weighted(const RadialFunction& f, int N, double lo,
                            double hi,
                            const std::function<double(double)>& g) {
  check_bounds(lo, hi);
  if (!f.grid) throw std::invalid_argument("quad_radial: no grid");
  if (!g) throw std::invalid_argument("quad_radial_weighted: empty factor");
  const double NV = N * unit_ball_volume(N);
  if (f.has_evaluator())
    return finish(NV *
                  eval_route([&](double r) { return f.eval.value(r) * g(r); },
                             N, lo, hi, inner_panels_for(*f.grid),
                             outer_panels_for(*f.grid)));
  std::vector<double> v(f.values.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = f.values[i] * g(f.grid->r[i]);
  return finish(NV * sampled_route(*f.grid, v, N, lo, hi));
}

double quad_radial_fn(const std::function<double(double)>& f, int N, double lo,
                      double hi, int panels) {
  check_bounds(lo, hi);
  if (!f) throw std::invalid_argument("quad_radial_fn: empty function");
  const double NV = N * unit_ball_volume(N);
  return finish(NV * eval_route(f, N, lo, hi, panels, panels));
}

std::vector<double> nodal_volume_weights(const RadialGrid& grid, int N) {
  const double NV = N * unit_ball_volume(N);
  std::vector<double> c(grid.size(), 0.0);
  c.front() = std::pow(grid.r.front(), N) / N;
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    const double xa = std::log(grid.r[i]), xb = std::log(grid.r[i + 1]);
    const double h = xb - xa, z = N * h;
    const double base = std::exp(N * xa) * h;
    const double p1 = phi1(z);
    c[i] += base * (phi0(z) - p1);
    c[i + 1] += base * p1;
  }
  for (double& x : c) x *= NV;
  return c;
}

}  // namespace adamslab
