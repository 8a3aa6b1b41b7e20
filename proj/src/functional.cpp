#include "adamslab/functional.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "adamslab/operators.hpp"
#include "adamslab/quadrature.hpp"

namespace adamslab {

double NormBreakdown::norm(int N) const { return std::pow(total, 2.0 / N); }

NormBreakdown e_norm(const RadialFunction& u, const WeightSpec& w) {
  validate(w);
  if (!u.grid) throw std::invalid_argument("e_norm: no grid");
  const int N = w.N;
  const double p = N / 2.0;
  const double R = u.grid->R;
  NormBreakdown out;
  if (u.has_evaluator() && u.eval.has_derivatives()) {
    const int panels =
        std::max<int>(256, static_cast<int>(u.grid->size()));
    auto lap = [&](double r) {
      return u.eval.deriv2(r) + (N - 1) * u.eval.deriv(r) / r;
    };
    out.bilaplacian_w = quad_radial_fn(
        [&](double r) {
          return weight_eval(w, r) * std::pow(std::abs(lap(r)), p);
        },
        N, 0.0, R, panels);
    out.gradient = quad_radial_fn(
        [&](double r) { return std::pow(std::abs(u.eval.deriv(r)), p); }, N,
        0.0, R, panels);
    out.lp = quad_radial_fn(
        [&](double r) { return std::pow(std::abs(u.eval.value(r)), p); }, N,
        0.0, R, panels);
  } else {
    const auto lap = laplacian_radial(*u.grid, u.values, N);
    const auto grad = gradient_radial(*u.grid, u.values);
    const auto c = nodal_volume_weights(*u.grid, N);
    for (std::size_t i = 0; i < c.size(); ++i) {
      const double r = u.grid->r[i];
      out.bilaplacian_w +=
          c[i] * weight_eval(w, r) * std::pow(std::abs(lap[i]), p);
      out.gradient += c[i] * std::pow(std::abs(grad[i]), p);
      out.lp += c[i] * std::pow(std::abs(u.values[i]), p);
    }
  }
  out.total = out.bilaplacian_w + out.gradient + out.lp;
  return out;
}

namespace {

struct ExpTracker {
  double budget = 700.0;
  double max_exponent = 0.0;
  bool overflow = false;

  double term(double e) {
    max_exponent = std::max(max_exponent, e);
    if (e > budget) {
      overflow = true;
      e = budget;
    }
    return std::expm1(e);
  }
};

}  // namespace

AdamsValue adams_functional(const RadialFunction& u, double alpha,
                            double gamma, int N, double lo, double hi,
                            double budget) {
  if (!(alpha > 0.0))
    throw std::invalid_argument("adams_functional: alpha must be positive");
  if (!(gamma > 1.0))
    throw std::invalid_argument("adams_functional: gamma must exceed 1");
  if (!u.grid) throw std::invalid_argument("adams_functional: no grid");
  AdamsValue out;
  auto tracker = std::make_shared<ExpTracker>();
  tracker->budget = budget;
  if (u.has_evaluator()) {
    const int panels =
        std::max<int>(256, static_cast<int>(u.grid->size()));
    out.value = quad_radial_fn(
        [&, tracker](double r) {
          return tracker->term(alpha *
                               std::pow(std::abs(u.eval.value(r)), gamma));
        },
        N, lo, hi, panels);
  } else {
    std::vector<double> g(u.values.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
      const bool in_range = u.grid->r[i] >= lo && u.grid->r[i] <= hi;
      const double e = alpha * std::pow(std::abs(u.values[i]), gamma);
      g[i] = in_range ? tracker->term(e) : std::expm1(std::min(e, budget));
    }
    out.value = quad_radial(from_values(u.grid, g), N, lo, hi);
  }
  out.max_exponent = tracker->max_exponent;
  out.overflow = tracker->overflow;
  return out;
}

AdamsValue adams_functional_outer_series(const RadialFunction& u, double alpha,
                                         double gamma, int N, double budget) {
  if (!(alpha > 0.0))
    throw std::invalid_argument("adams_functional: alpha must be positive");
  if (!u.grid) throw std::invalid_argument("adams_functional: no grid");
  const double R = u.grid->R;
  AdamsValue out;
  // max |u| on r >= 1 bounds every exponent in the series
  double umax = 0.0;
  if (u.has_evaluator()) {
    for (int j = 0; j <= 512; ++j) {
      const double r = std::exp(std::log(R) * j / 512.0);
      umax = std::max(umax, std::abs(u.eval.value(r)));
    }
  } else {
    for (std::size_t i = 0; i < u.values.size(); ++i)
      if (u.grid->r[i] >= 1.0) umax = std::max(umax, std::abs(u.values[i]));
  }
  out.max_exponent = alpha * std::pow(umax, gamma);
  out.overflow = out.max_exponent > budget;

  double coef = 1.0;  // alpha^k / k!
  for (int k = 1; k <= 80; ++k) {
    coef *= alpha / k;
    double moment;
    if (u.has_evaluator()) {
      moment = quad_radial_fn(
          [&](double r) {
            return std::pow(std::abs(u.eval.value(r)), gamma * k);
          },
          N, 1.0, R, 256);
    } else {
      std::vector<double> g(u.values.size());
      for (std::size_t i = 0; i < g.size(); ++i)
        g[i] = std::pow(std::abs(u.values[i]), gamma * k);
      moment = quad_radial(from_values(u.grid, g), N, 1.0, R);
    }
    const double term = coef * moment;
    out.value += term;
    if (term < 1e-16 * std::max(out.value, 1e-300) || out.overflow) break;
  }
  return out;
}

DecayCheck radial_decay_check(const RadialFunction& u, int N) {
  if (!u.grid) throw std::invalid_argument("radial_decay_check: no grid");
  const double p = N / 2.0;
  std::vector<double> absg(u.values.size()), absu(u.values.size());
  const auto grad = gradient_radial(*u.grid, u.values);
  for (std::size_t i = 0; i < u.values.size(); ++i) {
    absg[i] = std::pow(std::abs(grad[i]), p);
    absu[i] = std::pow(std::abs(u.values[i]), p);
  }
  const double lp =
      std::pow(quad_radial(from_values(u.grid, absu), N, 0.0, u.grid->R),
               2.0 / N);
  const double gp =
      std::pow(quad_radial(from_values(u.grid, absg), N, 0.0, u.grid->R),
               2.0 / N);
  if (lp == 0.0 || gp == 0.0)
    throw std::invalid_argument("radial_decay_check: zero norms");
  const double scale =
      std::pow(lp, (N - 2.0) / N) * std::pow(gp, 2.0 / N);
  DecayCheck out;
  for (std::size_t i = 0; i < u.values.size(); ++i) {
    const double r = u.grid->r[i];
    if (r < 1.0) continue;
    const double ratio =
        std::abs(u.values[i]) * std::pow(r, 2.0 * (N - 1) / N) / scale;
    out.table.emplace_back(r, ratio);
    if (ratio > out.constant) {
      out.constant = ratio;
      out.argmax_r = r;
    }
  }
  return out;
}

std::vector<std::pair<double, double>> embedding_probe(
    const RadialFunction& u, const WeightSpec& w,
    const std::vector<double>& q_list) {
  const int N = w.N;
  const double norm_e = e_norm(u, w).norm(N);
  if (norm_e == 0.0)
    throw std::invalid_argument("embedding_probe: u is trivial");
  std::vector<std::pair<double, double>> out;
  for (double q : q_list) {
    if (!(q >= N / 2.0))
      throw std::invalid_argument("embedding_probe: q below N/2");
    double lq;
    if (u.has_evaluator()) {
      lq = quad_radial_fn(
          [&](double r) { return std::pow(std::abs(u.eval.value(r)), q); }, N,
          0.0, u.grid->R, 256);
    } else {
      std::vector<double> g(u.values.size());
      for (std::size_t i = 0; i < g.size(); ++i)
        g[i] = std::pow(std::abs(u.values[i]), q);
      lq = quad_radial(from_values(u.grid, g), N, 0.0, u.grid->R);
    }
    out.emplace_back(q, std::pow(lq, 1.0 / q) / norm_e);
  }
  return out;
}

double lions_threshold(double norm_u, const SobolevConstants& c) {
  if (!(norm_u >= 0.0))
    throw std::invalid_argument("lions_threshold: norm must be nonnegative");
  const double s = 1.0 - std::pow(norm_u, c.N / 2.0);
  if (s <= 0.0) return HUGE_VAL;
  return std::pow(s, -2.0 * c.gamma / c.N);
}

}  // namespace adamslab
