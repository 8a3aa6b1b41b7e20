#pragma once

// Nonlinearities f(t) with primitive F and the structural hypotheses the
// variational argument needs: superlinearity (a theta-condition), vanishing
// at zero against |t|^{N/2-1}, F controlled by f at infinity, and a lower
// growth bound against e^{alpha_0 t^gamma} whose threshold constant is
// computed exactly.

#include <functional>
#include <string>
#include <vector>

#include "adamslab/constants.hpp"

namespace adamslab {

enum class NonlinearityKind { SubcriticalPower, CriticalExp };

struct NonlinearitySpec {
  NonlinearityKind kind = NonlinearityKind::SubcriticalPower;
  double lambda = 1.0;  // overall scale, > 0
  double theta = 5.0;   // declared superlinearity exponent, > N
  double alpha0 = 0.0;  // critical growth rate (CriticalExp only), > 0
  double gamma = 4.0;   // exponent inside e^{alpha_0 |t|^gamma}
  double q = 8.0;       // envelope power for the growth bound
  double t0 = 1.0;      // declared onset for the F <= M0 |f| bound
  double M0 = 1.0;      // declared constant for that bound
  double gamma0 = 1.0;  // declared liminf of f(t) t e^{-alpha_0 t^gamma}

  std::function<double(double)> f;        // f(t)
  std::function<double(double)> F;        // primitive, F(0) = 0
  std::function<double(double)> fprime;   // f'(t)
};

// f(t) = lambda |t|^{theta-2} t, F = lambda |t|^theta / theta.
NonlinearitySpec make_subcritical(double theta, double lambda);

// f(t) = lambda alpha0 gamma |t|^{gamma-2} t (e^{alpha0 |t|^gamma} - 1),
// F(t) = lambda (e^{alpha0 |t|^gamma} - 1 - alpha0 |t|^gamma).
// Exact primitive; critical growth at rate alpha0; theta-condition holds up
// to theta = 2 gamma.
NonlinearitySpec make_critical(double alpha0, double lambda, double gamma);

struct HypothesisRow {
  std::string id;
  bool satisfied = false;
  double witness = 0.0;   // extremal sampled quantity backing the verdict
  std::string detail;
};
struct HypothesisReport {
  std::vector<HypothesisRow> rows;
  bool all_satisfied = false;
  double gamma0_threshold = 0.0;  // (alpha_beta/alpha0)^{N/(2 gamma)} / (V_N e^{N(1-log 2e)})
  double growth_q_constant = 0.0; // fitted C in the eps/C growth envelope
};

// Samples f on [t_min, t_max] (log-spaced, both signs) and checks each
// hypothesis; the gamma0 threshold is evaluated with alpha0 = spec.alpha0
// for the critical family and alpha_beta itself for the subcritical one.
HypothesisReport check_hypotheses(const NonlinearitySpec& nl,
                                  const SobolevConstants& c,
                                  double t_min = 1e-6, double t_max = 4.0,
                                  std::size_t samples = 2000);

std::string to_string(NonlinearityKind k);

}  // namespace adamslab
