#include "adamslab/weight.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "adamslab/gauss_panels.hpp"
#include "adamslab/quadrature.hpp"

namespace adamslab {

double beta_lower(int N) {
  return static_cast<double>(N * N - 4 * N + 2) / (N * (N - 2));
}

void validate(const WeightSpec& spec) {
  if (spec.N < 4 || spec.N % 2 != 0)
    throw std::invalid_argument("WeightSpec.N: must be even and >= 4");
  const double lo = beta_lower(spec.N);
  if (!(spec.beta > lo && spec.beta < 1.0))
    throw std::invalid_argument("WeightSpec.beta: outside the admissible interval");
  if (!(spec.M > 0.0)) throw std::invalid_argument("WeightSpec.M: must be positive");
  switch (spec.chi) {
    case ChiKind::Power:
      if (!(spec.delta > 0.0 && spec.delta < spec.N * spec.N / 2.0 - spec.N))
        throw std::invalid_argument(
            "WeightSpec.delta: outside (0, N^2/2 - N)");
      break;
    case ChiKind::Log:
      if (!(spec.sigma > 1.0))
        throw std::invalid_argument("WeightSpec.sigma: must exceed 1");
      break;
    case ChiKind::Bounded: {
      const auto& t = spec.chi_table;
      if (t.empty() || t.front().first != 1.0 || t.front().second != 1.0)
        throw std::invalid_argument("WeightSpec.chi_table: must start at (1, 1)");
      for (std::size_t i = 0; i < t.size(); ++i) {
        if (t[i].second < 1.0)
          throw std::invalid_argument("WeightSpec.chi_table: values must be >= 1");
        if (i > 0 && !(t[i].first > t[i - 1].first))
          throw std::invalid_argument(
              "WeightSpec.chi_table: radii must increase");
      }
      break;
    }
  }
}

double chi_eval(const WeightSpec& spec, double r) {
  if (!(r >= 1.0)) throw std::invalid_argument("chi_eval: r < 1");
  switch (spec.chi) {
    case ChiKind::Power:
      return std::pow(r, spec.delta);
    case ChiKind::Log: {
      const double l = std::log(r);
      return 1.0 + std::pow(l, spec.sigma);
    }
    case ChiKind::Bounded: {
      const auto& t = spec.chi_table;
      if (r >= t.back().first) return t.back().second;
      std::size_t i = 1;
      while (t[i].first < r) ++i;
      const double xa = std::log(t[i - 1].first), xb = std::log(t[i].first);
      const double s = (std::log(r) - xa) / (xb - xa);
      return t[i - 1].second + s * (t[i].second - t[i - 1].second);
    }
  }
  return 1.0;
}

double weight_eval(const WeightSpec& spec, double r) {
  if (!(r > 0.0)) throw std::invalid_argument("weight_eval: r <= 0");
  if (r < 1.0)
    return std::pow(1.0 - std::log(r), spec.beta * (spec.N / 2.0 - 1.0));
  return chi_eval(spec, r);
}

ChiConditionReport check_chi_conditions(const WeightSpec& spec, double r_max,
                                        std::size_t samples) {
  if (!(r_max > 1.0))
    throw std::invalid_argument("check_chi_conditions: r_max <= 1");
  if (samples < 16)
    throw std::invalid_argument("check_chi_conditions: samples < 16");

  const int N = spec.N;
  const double half_pow = N * N / 2.0;
  ChiConditionReport rep;
  rep.M = spec.M;
  rep.r_max = r_max;

  // cumulative tail integrals A = int_1^r t^{N-1} chi, B = int_1^r t^{N-1}/chi,
  // accumulated segment by segment on a geometric r-grid (s = log t panels)
  double A = 0.0, B = 0.0;
  double sup_now[3] = {0, 0, 0};
  double sup_early[3] = {0, 0, 0};  // over r <= r_max / 10
  const double lmax = std::log(r_max);
  double s_prev = 0.0;
  for (std::size_t k = 0; k < samples; ++k) {
    const double s =
        lmax * static_cast<double>(k) / static_cast<double>(samples - 1);
    if (k > 0) {
      A += gauss_panels(
          [&](double x) {
            return std::exp(N * x) * chi_eval(spec, std::exp(x));
          },
          s_prev, s, 4);
      B += gauss_panels(
          [&](double x) {
            return std::exp(N * x) / chi_eval(spec, std::exp(x));
          },
          s_prev, s, 4);
    }
    s_prev = s;
    const double r = std::exp(s);
    const double denom = std::pow(r, half_pow);
    const double c1 = A * std::pow(B, N / 2.0 - 1.0) / denom;
    const double c2 = A / denom;
    double lo = chi_eval(spec, r), hi = lo;
    for (int j = 1; j <= 32; ++j) {
      const double v =
          chi_eval(spec, r * std::pow(4.0, static_cast<double>(j) / 32.0));
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    const double c3 = hi / lo;
    const double cs[3] = {c1, c2, c3};
    for (int i = 0; i < 3; ++i) {
      sup_now[i] = std::max(sup_now[i], cs[i]);
      if (r <= r_max / 10.0) sup_early[i] = std::max(sup_early[i], cs[i]);
    }
  }
  for (int i = 0; i < 3; ++i) {
    rep.sup[i] = sup_now[i];
    rep.bounded[i] = sup_now[i] <= spec.M;
    rep.growing[i] = sup_now[i] > sup_early[i] * 1.001;
  }
  return rep;
}

MuckenhouptReport muckenhoupt_probe(const WeightSpec& spec,
                                    const std::vector<double>& centers,
                                    const std::vector<double>& radii) {
  MuckenhouptReport rep;
  const int N = spec.N;
  const double V = unit_ball_volume(N);
  auto w = [&](double r) { return weight_eval(spec, r); };
  auto winv = [&](double r) { return 1.0 / weight_eval(spec, r); };
  for (double c : centers) {
    if (c < 0.0) throw std::invalid_argument("muckenhoupt_probe: center < 0");
    for (double rho : radii) {
      if (!(rho > 0.0))
        throw std::invalid_argument("muckenhoupt_probe: radius <= 0");
      // center 0: the ball B(0, rho); otherwise the spherical shell
      // |c - rho| <= r <= c + rho, the annular reduction of the off-center
      // ball estimates
      const double lo = c == 0.0 ? 0.0 : std::abs(c - rho);
      const double hi = c + rho;
      const double vol = V * (std::pow(hi, N) - std::pow(lo, N));
      const double avg_w = quad_radial_fn(w, N, lo, hi, 192) / vol;
      const double avg_winv = quad_radial_fn(winv, N, lo, hi, 192) / vol;
      MuckenhouptRow row;
      row.center = c;
      row.radius = rho;
      row.product = avg_w * std::pow(avg_winv, N / 2.0 - 1.0);
      rep.rows.push_back(row);
      rep.max_product = std::max(rep.max_product, row.product);
    }
  }
  return rep;
}

std::string to_string(ChiKind k) {
  switch (k) {
    case ChiKind::Bounded: return "bounded";
    case ChiKind::Power: return "power";
    case ChiKind::Log: return "log";
  }
  return "bounded";
}

}  // namespace adamslab
