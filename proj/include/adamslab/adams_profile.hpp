#pragma once

// The concentrating test sequence for the sharp exponential threshold.
//
// Each profile w_n is piecewise on [0, 1]: a flat cap on [0, n^{-1/N}], a
// (log(e/r))^{1-beta} core on [n^{-1/N}, 1/2], a C^1 cubic cutoff on [1/2, 1],
// and zero beyond. n enters only through log n, so n is carried on a log
// scale and may far exceed the floating-point range.
//
// The printed cap carries a constant term with (1/n)^{2(1-beta)/N} in the
// denominator, which grows with n and breaks continuity at the first break
// radius; the continuity_fix form moves that factor to the numerator, which
// restores exact matching with the core. Both forms are implemented; the gap
// is audited either way.
//
// Norm accounting uses the energy-normalized convention
// (2/N) ||.||^{N/2}: with it the calibration constant drives the dominant
// core integral to 1. The plain sum converges to N/2 instead; e_norm()
// reports that one.

#include <string>
#include <vector>

#include "adamslab/constants.hpp"
#include "adamslab/functional.hpp"
#include "adamslab/weight.hpp"

namespace adamslab {

enum class CapForm { Printed, ContinuityFix };

struct AdamsProfile {
  int N = 4;
  double beta = 0.5;
  double gamma = 4.0;
  double alpha = 0.0;      // sharp exponent under the chosen convention
  AlphaConvention convention = AlphaConvention::General;
  CapForm cap_form = CapForm::Printed;
  double C = 0.0;          // calibration constant
  double ln_n = 0.0;
  double L = 0.0;          // log(e n^{1/N}) = 1 + ln_n / N
  double t_break1 = 0.0;   // -log(break1) = ln_n / N
  double cap_const = 0.0;  // cap value at the break radius side
  double cap_coef = 0.0;   // coefficient of r^{2(1-beta)}
  double cap_term3 = 0.0;  // the disputed constant term
  double core_coef = 0.0;  // coefficient of (log(e/r))^{1-beta}
  double cut_a[4] = {0, 0, 0, 0};  // cubic cutoff, powers of (r - 1/2)

  double break1() const;   // n^{-1/N}; 0 if it underflows
  double value(double r) const;
  double deriv(double r) const;
  double deriv2(double r) const;
  double lap(double r) const;   // radial Laplacian
  // value/deriv as functions of t = -log r, for the deep cap region where r
  // itself underflows.
  double value_t(double t) const;

  RadialEvaluator evaluator() const;
};

// ln_n must exceed N log 2 (break1 < 1/2).
AdamsProfile adams_fn(double ln_n, const SobolevConstants& c,
                      AlphaConvention conv, CapForm form);

// Piecewise norm accounting, all parts energy-normalized by 2/N.
// parts index: [piece][term] with piece 0 = cap, 1 = core, 2 = cutoff and
// term 0 = weighted bilaplacian, 1 = gradient, 2 = L^{N/2}.
struct FidelityReport {
  double ln_n = 0.0;
  double parts[3][3] = {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}};
  double norm_total = 0.0;      // sum of all nine parts
  double gap_value_break1 = 0.0;   // cap(b1) - core(b1)
  double gap_slope_break1 = 0.0;
  double gap_value_half = 0.0;     // core(1/2) - cutoff(1/2), zero by design
  double gap_slope_half = 0.0;
  double cap_min = 0.0;            // min of w_n over the cap
  double cap_min_bound = 0.0;      // C (L/alpha)^{1/gamma}
  AlphaConvention convention = AlphaConvention::General;
  CapForm cap_form = CapForm::Printed;
};
FidelityReport fidelity(const AdamsProfile& p, const WeightSpec& w);

// Norm trend along an n-sweep, run under both conventions.
struct NormTrendRow {
  double ln_n = 0.0;
  double norm_total = 0.0;
  double dist_to_one = 0.0;
  FidelityReport report;
};
struct NormTrend {
  std::vector<NormTrendRow> rows;        // selected convention
  bool decreasing_general = false;       // |norm_total - 1| strictly decreasing
  bool decreasing_fourdim = false;
  AlphaConvention selected = AlphaConvention::General;
  // multiplicative decrease of each remainder part per factor-10 step in n,
  // geometric mean over the sweep; order: cap-bil, cap-grad, core-grad,
  // cut-bil, cut-grad.
  double remainder_decade_factor[5] = {0, 0, 0, 0, 0};
};
NormTrend norm_trend(const std::vector<double>& ln_n_list, int N, double beta,
                     const WeightSpec& w, CapForm form);

// Exponential functional of the normalized profile v_n = w_n / ||w_n||,
// restricted to the cap, at exponent alpha_ratio * alpha_beta. Values are
// carried in natural log; the overflow flag fires when the log-value
// exceeds the budget (the blow-up regime), underflow reports 0.
struct BlowupRow {
  double ln_n = 0.0;
  double exponent_peak = 0.0;  // max of alpha |v_n|^gamma over the cap
  double ln_value = 0.0;       // log of the functional; -inf when it underflows
  double value = 0.0;          // exp(ln_value) clamped to the double range
  bool overflow = false;
};
struct BlowupTable {
  double alpha_ratio = 0.0;
  std::vector<BlowupRow> rows;
  bool any_overflow = false;
  bool log_values_increasing = false;  // strictly, along the sweep
  double max_over_first_log10 = 0.0;   // log10(max value / first value)
};
BlowupTable blowup_probe(double alpha_ratio,
                         const std::vector<double>& ln_n_list,
                         const SobolevConstants& c, const WeightSpec& w,
                         AlphaConvention conv, CapForm form,
                         double budget = 700.0);

std::string to_string(CapForm f);

}  // namespace adamslab
