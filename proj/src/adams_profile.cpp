#include "adamslab/adams_profile.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "adamslab/gauss_panels.hpp"
#include "adamslab/quadrature.hpp"

namespace adamslab {

double AdamsProfile::break1() const { return std::exp(-t_break1); }

double AdamsProfile::value(double r) const {
  if (r < 0.0) throw std::invalid_argument("AdamsProfile: r < 0");
  return value_t(r == 0.0 ? HUGE_VAL : -std::log(r));
}

double AdamsProfile::value_t(double t) const {
  if (t >= t_break1) {
    const double x = std::exp(-2.0 * (1.0 - beta) * t);  // r^{2(1-beta)}
    return C * (cap_const + cap_term3 - cap_coef * x);
  }
  if (t >= std::log(2.0)) return C * core_coef * std::pow(1.0 + t, 1.0 - beta);
  const double r = std::exp(-t);
  if (r >= 1.0) return 0.0;
  const double s = r - 0.5;
  return C * (cut_a[0] + s * (cut_a[1] + s * (cut_a[2] + s * cut_a[3])));
}

double AdamsProfile::deriv(double r) const {
  if (!(r > 0.0)) throw std::invalid_argument("AdamsProfile: r <= 0");
  if (r >= 1.0) return 0.0;
  const double b1 = break1();
  if (r <= b1)
    return -C * cap_coef * 2.0 * (1.0 - beta) *
           std::pow(r, 1.0 - 2.0 * beta);
  if (r <= 0.5) {
    const double ell = 1.0 - std::log(r);
    return -C * core_coef * (1.0 - beta) * std::pow(ell, -beta) / r;
  }
  const double s = r - 0.5;
  return C * (cut_a[1] + s * (2.0 * cut_a[2] + 3.0 * s * cut_a[3]));
}

double AdamsProfile::deriv2(double r) const {
  if (!(r > 0.0)) throw std::invalid_argument("AdamsProfile: r <= 0");
  if (r >= 1.0) return 0.0;
  const double b1 = break1();
  if (r <= b1)
    return -C * cap_coef * 2.0 * (1.0 - beta) * (1.0 - 2.0 * beta) *
           std::pow(r, -2.0 * beta);
  if (r <= 0.5) {
    const double ell = 1.0 - std::log(r);
    return C * core_coef * (1.0 - beta) / (r * r) *
           (std::pow(ell, -beta) - beta * std::pow(ell, -beta - 1.0));
  }
  return C * (2.0 * cut_a[2] + 6.0 * cut_a[3] * (r - 0.5));
}

double AdamsProfile::lap(double r) const {
  if (!(r > 0.0)) throw std::invalid_argument("AdamsProfile: r <= 0");
  if (r >= 1.0) return 0.0;
  const double b1 = break1();
  if (r <= b1)
    return -C * cap_coef * 2.0 * (1.0 - beta) * (N - 2.0 * beta) *
           std::pow(r, -2.0 * beta);
  if (r <= 0.5) {
    const double ell = 1.0 - std::log(r);
    return -C * core_coef * (1.0 - beta) / (r * r) * std::pow(ell, -beta) *
           ((N - 2.0) + beta / ell);
  }
  return deriv2(r) + (N - 1) * deriv(r) / r;
}

RadialEvaluator AdamsProfile::evaluator() const {
  RadialEvaluator ev;
  AdamsProfile p = *this;
  ev.value = [p](double r) { return p.value(r); };
  ev.deriv = [p](double r) { return p.deriv(r); };
  ev.deriv2 = [p](double r) { return p.deriv2(r); };
  return ev;
}

AdamsProfile adams_fn(double ln_n, const SobolevConstants& c,
                      AlphaConvention conv, CapForm form) {
  const int N = c.N;
  if (!(ln_n > N * std::log(2.0)))
    throw std::invalid_argument("adams_fn: need log n > N log 2");
  if (conv == AlphaConvention::FourDim && N != 4)
    throw std::invalid_argument("adams_fn: fourdim convention needs N = 4");

  AdamsProfile p;
  p.N = N;
  p.beta = c.beta;
  p.gamma = c.gamma;
  p.convention = conv;
  p.cap_form = form;
  p.alpha = c.alpha(conv);
  p.ln_n = ln_n;
  p.L = 1.0 + ln_n / N;
  p.t_break1 = ln_n / N;

  const double b = c.beta;
  p.C = std::pow(0.5, 2.0 / N) * std::pow(p.alpha, 1.0 / p.gamma) /
        (std::pow(c.V_N, 2.0 / N) * std::pow(1.0 - b, 1.0 - 2.0 / N) *
         (N - 2));

  const double ai = std::pow(p.alpha, -1.0 / p.gamma);  // alpha^{-1/gamma}
  p.cap_const = std::pow(p.L / p.alpha, 1.0 / p.gamma);
  p.cap_coef = 0.5 * ai * std::pow(p.L, -(p.gamma - 1.0) / p.gamma);
  const double x1 = 2.0 * (1.0 - b) * ln_n / N;  // -log of (1/n)^{2(1-b)/N}
  p.cap_term3 = form == CapForm::Printed ? p.cap_coef * std::exp(x1)
                                         : p.cap_coef * std::exp(-x1);
  p.core_coef = ai * std::pow(p.L, -2.0 * (1.0 - b) / N);

  // C^1 cubic cutoff on [1/2, 1], zero value and slope at 1
  const double l2e = std::log(2.0) + 1.0;  // log(2e)
  const double a0 = p.core_coef * std::pow(l2e, 1.0 - b);
  const double a1 = -2.0 * (1.0 - b) * p.core_coef * std::pow(l2e, -b);
  const double h = 0.5;
  p.cut_a[0] = a0;
  p.cut_a[1] = a1;
  p.cut_a[2] = (-3.0 * a0 - 2.0 * a1 * h) / (h * h);
  p.cut_a[3] = (2.0 * a0 + a1 * h) / (h * h * h);
  return p;
}

namespace {

constexpr double kLog2 = 0.69314718055994530942;

struct PieceParts {
  double bil = 0.0, grad = 0.0, lp = 0.0;
};

// Cap piece [0, break1] in tau = t - t_break1. The r-powers of the
// integrands are folded into single decaying exponentials, so deep caps
// (log n far beyond the floating range of n) stay representable: the
// underflow of e^{-a t_break1} is the genuine smallness of the part.
PieceParts cap_parts(const AdamsProfile& p) {
  PieceParts out;
  const int N = p.N;
  const double b = p.beta;
  const double NV = N * unit_ball_volume(N);
  const double t1 = p.t_break1;
  const double wexp = b * (N / 2.0 - 1.0);
  const double half = N / 2.0;

  const double k_lap = p.C * p.cap_coef * 2.0 * (1.0 - b) * (N - 2.0 * b);
  const double a_bil = N * (1.0 - b);
  const double pref_bil = std::pow(k_lap, half) * std::exp(-a_bil * t1);
  if (pref_bil > 0.0) {
    const double tmax = 300.0 / a_bil;
    out.bil = pref_bil * gauss_panels(
                             [&](double tau) {
                               return std::exp(-a_bil * tau) *
                                      std::pow(1.0 + t1 + tau, wexp);
                             },
                             0.0, tmax, 256);
  }

  // |w'|^{N/2} r^{N-1} dr has the pure exponential e^{-a tau} in t-space
  const double k_grad = p.C * p.cap_coef * 2.0 * (1.0 - b);
  const double a_grad = N * (3.0 - 2.0 * b) / 2.0;
  out.grad = std::pow(k_grad, half) * std::exp(-a_grad * t1) / a_grad;

  const double pref_lp = std::exp(-static_cast<double>(N) * t1);
  if (pref_lp > 0.0) {
    out.lp = pref_lp * gauss_panels(
                           [&](double tau) {
                             return std::exp(-static_cast<double>(N) * tau) *
                                    std::pow(p.value_t(t1 + tau), half);
                           },
                           0.0, 300.0 / N, 256);
  }
  out.bil *= NV;
  out.grad *= NV;
  out.lp *= NV;
  return out;
}

// Core piece [break1, 1/2] in u = log(1 + t); the 1/r^2 of the Laplacian
// cancels against r^N dt exactly.
PieceParts core_parts(const AdamsProfile& p) {
  PieceParts out;
  const int N = p.N;
  const double b = p.beta;
  const double NV = N * unit_ball_volume(N);
  const double half = N / 2.0;
  const double wexp = b * (half - 1.0);
  const double k = p.C * p.core_coef * (1.0 - b);

  const double ua = std::log1p(kLog2), ub = std::log1p(p.t_break1);
  const int panels = 768;

  out.bil = NV * std::pow(k, half) *
            gauss_panels(
                [&](double u) {
                  const double t = std::expm1(u);
                  const double ell = 1.0 + t;
                  return std::pow(ell, -half * b + wexp) *
                         std::pow((N - 2.0) + b / ell, half) * ell;
                },
                ua, ub, panels);
  out.grad = NV * std::pow(k, half) *
             gauss_panels(
                 [&](double u) {
                   const double t = std::expm1(u);
                   const double ell = 1.0 + t;
                   return std::exp(-half * t) * std::pow(ell, -half * b) * ell;
                 },
                 ua, ub, panels);
  out.lp = NV * std::pow(p.C * p.core_coef, half) *
           gauss_panels(
               [&](double u) {
                 const double t = std::expm1(u);
                 const double ell = 1.0 + t;
                 return std::exp(-static_cast<double>(N) * t) *
                        std::pow(ell, (1.0 - b) * half) * ell;
               },
               ua, ub, panels);
  return out;
}

// Cutoff piece [1/2, 1] in plain r.
PieceParts cut_parts(const AdamsProfile& p, const WeightSpec& w) {
  PieceParts out;
  const int N = p.N;
  const double NV = N * unit_ball_volume(N);
  const double half = N / 2.0;
  out.bil = NV * gauss_panels(
                     [&](double r) {
                       return std::pow(r, N - 1.0) * weight_eval(w, r) *
                              std::pow(std::abs(p.lap(r)), half);
                     },
                     0.5, 1.0, 192);
  out.grad = NV * gauss_panels(
                      [&](double r) {
                        return std::pow(r, N - 1.0) *
                               std::pow(std::abs(p.deriv(r)), half);
                      },
                      0.5, 1.0, 192);
  out.lp = NV * gauss_panels(
                    [&](double r) {
                      return std::pow(r, N - 1.0) *
                             std::pow(std::abs(p.value(r)), half);
                    },
                    0.5, 1.0, 192);
  return out;
}

}  // namespace

FidelityReport fidelity(const AdamsProfile& p, const WeightSpec& w) {
  if (w.N != p.N || w.beta != p.beta)
    throw std::invalid_argument("fidelity: weight and profile disagree");
  FidelityReport rep;
  rep.ln_n = p.ln_n;
  rep.convention = p.convention;
  rep.cap_form = p.cap_form;

  const PieceParts pieces[3] = {cap_parts(p), core_parts(p), cut_parts(p, w)};
  const double scale = 2.0 / p.N;
  for (int i = 0; i < 3; ++i) {
    rep.parts[i][0] = scale * pieces[i].bil;
    rep.parts[i][1] = scale * pieces[i].grad;
    rep.parts[i][2] = scale * pieces[i].lp;
    rep.norm_total += rep.parts[i][0] + rep.parts[i][1] + rep.parts[i][2];
  }

  // seam audit at break1 and 1/2; slopes are taken in the log variable
  // (r du/dr), which stays representable at deep caps
  const double t1 = p.t_break1;
  const double x = std::exp(-2.0 * (1.0 - p.beta) * t1);
  const double cap_v = p.C * (p.cap_const + p.cap_term3 - p.cap_coef * x);
  const double core_v1 = p.C * p.core_coef * std::pow(p.L, 1.0 - p.beta);
  rep.gap_value_break1 = cap_v - core_v1;
  const double cap_s = -p.C * p.cap_coef * 2.0 * (1.0 - p.beta) * x;
  const double core_s1 =
      -p.C * p.core_coef * (1.0 - p.beta) * std::pow(p.L, -p.beta);
  rep.gap_slope_break1 = cap_s - core_s1;

  const double l2e = 1.0 + kLog2;
  const double core_vh = p.C * p.core_coef * std::pow(l2e, 1.0 - p.beta);
  const double cut_vh = p.C * p.cut_a[0];
  rep.gap_value_half = core_vh - cut_vh;
  const double core_sh =
      -p.C * p.core_coef * (1.0 - p.beta) * std::pow(l2e, -p.beta);
  const double cut_sh = 0.5 * p.C * p.cut_a[1];
  rep.gap_slope_half = core_sh - cut_sh;

  rep.cap_min = p.value_t(t1);
  rep.cap_min_bound = p.C * std::pow(p.L / p.alpha, 1.0 / p.gamma);
  return rep;
}

NormTrend norm_trend(const std::vector<double>& ln_n_list, int N, double beta,
                     const WeightSpec& w, CapForm form) {
  if (ln_n_list.size() < 2)
    throw std::invalid_argument("norm_trend: need at least two n values");
  for (std::size_t i = 1; i < ln_n_list.size(); ++i)
    if (!(ln_n_list[i] > ln_n_list[i - 1]))
      throw std::invalid_argument("norm_trend: n values must increase");

  const SobolevConstants c = constants(N, beta);
  NormTrend out;
  std::vector<NormTrendRow> rows_general, rows_fourdim;
  auto sweep = [&](AlphaConvention conv) {
    std::vector<NormTrendRow> rows;
    for (double ln_n : ln_n_list) {
      NormTrendRow row;
      row.ln_n = ln_n;
      row.report = fidelity(adams_fn(ln_n, c, conv, form), w);
      row.norm_total = row.report.norm_total;
      row.dist_to_one = std::abs(row.norm_total - 1.0);
      rows.push_back(row);
    }
    return rows;
  };
  auto strictly_down = [](const std::vector<NormTrendRow>& rows) {
    for (std::size_t i = 1; i < rows.size(); ++i)
      if (!(rows[i].dist_to_one < rows[i - 1].dist_to_one)) return false;
    return true;
  };

  rows_general = sweep(AlphaConvention::General);
  out.decreasing_general = strictly_down(rows_general);
  if (N == 4) {
    rows_fourdim = sweep(AlphaConvention::FourDim);
    out.decreasing_fourdim = strictly_down(rows_fourdim);
  }
  // general wins ties; fourdim is selected only when it alone converges
  out.selected = (!out.decreasing_general && out.decreasing_fourdim)
                     ? AlphaConvention::FourDim
                     : AlphaConvention::General;
  out.rows = out.selected == AlphaConvention::General ? rows_general
                                                      : rows_fourdim;

  // remainder decay per factor-10 step of n, geometric mean over the sweep
  const int pick[5][2] = {{0, 0}, {0, 1}, {1, 1}, {2, 0}, {2, 1}};
  const double decades =
      (ln_n_list.back() - ln_n_list.front()) / std::log(10.0);
  for (int k = 0; k < 5; ++k) {
    const double first = out.rows.front().report.parts[pick[k][0]][pick[k][1]];
    const double last = out.rows.back().report.parts[pick[k][0]][pick[k][1]];
    out.remainder_decade_factor[k] =
        (last > 0.0 && decades > 0.0) ? std::pow(first / last, 1.0 / decades)
                                      : HUGE_VAL;
  }
  return out;
}

BlowupTable blowup_probe(double alpha_ratio,
                         const std::vector<double>& ln_n_list,
                         const SobolevConstants& c, const WeightSpec& w,
                         AlphaConvention conv, CapForm form, double budget) {
  if (!(alpha_ratio > 0.0))
    throw std::invalid_argument("blowup_probe: alpha_ratio must be positive");
  BlowupTable out;
  out.alpha_ratio = alpha_ratio;
  const double alpha = alpha_ratio * c.alpha(conv);
  const int N = c.N;
  const double NV = N * unit_ball_volume(N);

  for (double ln_n : ln_n_list) {
    const AdamsProfile p = adams_fn(ln_n, c, conv, form);
    const FidelityReport rep = fidelity(p, w);
    const double norm = std::pow(rep.norm_total, 2.0 / N);

    BlowupRow row;
    row.ln_n = ln_n;
    const double t1 = p.t_break1;
    // v_n = w_n / ||w_n|| on the cap; work with
    //   psi(tau) = log(e^{E} - 1) - N tau,  E = alpha v^gamma,
    // and sum the quadrature in shifted log scale (peak subtracted), so the
    // value can exceed the double range by any margin.
    auto expo = [&](double tau) {
      const double v = p.value_t(t1 + tau) / norm;
      return alpha * std::pow(v, p.gamma);
    };
    const double tmax = 400.0 / N;
    const int panels = 512, npts = panels * kGaussPoints;
    std::vector<double> psi(npts), wq(npts);
    const double hstep = tmax / panels;
    double peak = -HUGE_VAL, epeak = 0.0;
    for (int pi = 0; pi < panels; ++pi) {
      const double mid = (pi + 0.5) * hstep;
      for (int q = 0; q < kGaussPoints; ++q) {
        const int idx = pi * kGaussPoints + q;
        const double tau = mid + 0.5 * hstep * kGaussX[q];
        const double E = expo(tau);
        epeak = std::max(epeak, E);
        // log(e^E - 1) = E + log(1 - e^{-E}); -inf when E underflows
        const double lg =
            E > 0.0 ? E + std::log1p(-std::exp(-E)) : -HUGE_VAL;
        psi[idx] = lg - N * tau;
        wq[idx] = kGaussW[q] * 0.5 * hstep;
        peak = std::max(peak, psi[idx]);
      }
    }
    row.exponent_peak = epeak;
    if (peak == -HUGE_VAL) {
      row.ln_value = -HUGE_VAL;
      row.value = 0.0;
      row.overflow = false;
    } else {
      double acc = 0.0;
      for (int i = 0; i < npts; ++i) acc += wq[i] * std::exp(psi[i] - peak);
      row.ln_value = std::log(NV) - ln_n + peak + std::log(acc);
      row.value = std::exp(row.ln_value);
      row.overflow = row.ln_value > budget;
    }
    out.rows.push_back(row);
  }
  out.any_overflow = false;
  out.log_values_increasing = out.rows.size() > 1;
  double first = out.rows.empty() ? 0.0 : out.rows.front().ln_value;
  double peak_ln = first;
  for (std::size_t i = 0; i < out.rows.size(); ++i) {
    out.any_overflow = out.any_overflow || out.rows[i].overflow;
    peak_ln = std::max(peak_ln, out.rows[i].ln_value);
    if (i > 0 && !(out.rows[i].ln_value > out.rows[i - 1].ln_value))
      out.log_values_increasing = false;
  }
  out.max_over_first_log10 = (peak_ln - first) / std::log(10.0);
  return out;
}

std::string to_string(CapForm f) {
  return f == CapForm::Printed ? "printed" : "continuity_fix";
}

}  // namespace adamslab
