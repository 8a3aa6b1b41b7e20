#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "adamslab/constants.hpp"
#include "adamslab/nonlinearity.hpp"

using namespace adamslab;

namespace {

const HypothesisRow& row(const HypothesisReport& rep, const std::string& id) {
  for (const auto& r : rep.rows)
    if (r.id == id) return r;
  REQUIRE(false);
  return rep.rows.front();
}

}  // namespace

TEST_CASE("subcritical power family") {
  const NonlinearitySpec nl = make_subcritical(5.0, 2.0);
  CHECK(nl.kind == NonlinearityKind::SubcriticalPower);
  CHECK(nl.theta == 5.0);
  CHECK(nl.f(2.0) == doctest::Approx(32.0).epsilon(1e-14));
  CHECK(nl.f(-2.0) == doctest::Approx(-32.0).epsilon(1e-14));
  CHECK(nl.F(2.0) == doctest::Approx(12.8).epsilon(1e-14));
  CHECK(nl.fprime(2.0) == doctest::Approx(64.0).epsilon(1e-14));
  // theta F(t) = t f(t) exactly for the pure power
  for (double t : {0.3, 1.7, -2.4})
    CHECK(5.0 * nl.F(t) == doctest::Approx(t * nl.f(t)).epsilon(1e-14));

  CHECK_THROWS_AS(make_subcritical(2.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(make_subcritical(5.0, 0.0), std::invalid_argument);
}

TEST_CASE("critical exponential family") {
  const double alpha0 = 3.0, lambda = 2.0, gamma = 4.0;
  const NonlinearitySpec nl = make_critical(alpha0, lambda, gamma);
  CHECK(nl.kind == NonlinearityKind::CriticalExp);
  CHECK(nl.theta == doctest::Approx(2.0 * gamma).epsilon(1e-14));
  CHECK(nl.t0 == doctest::Approx(std::pow(alpha0, -1.0 / gamma)).epsilon(1e-13));
  CHECK(nl.M0 == doctest::Approx(nl.t0 / gamma).epsilon(1e-13));

  // exact primitive at a plain point
  CHECK(nl.F(1.0) ==
        doctest::Approx(lambda * (std::expm1(3.0) - 3.0)).epsilon(1e-14));
  // F' = f by central differences
  for (double t : {0.4, 0.9, 1.3}) {
    const double h = 1e-6;
    const double fd = (nl.F(t + h) - nl.F(t - h)) / (2.0 * h);
    CHECK(fd == doctest::Approx(nl.f(t)).epsilon(1e-7));
  }
  // tiny arguments stay on the series branch instead of cancelling to zero
  const NonlinearitySpec unit = make_critical(1.0, 1.0, 4.0);
  const double tiny = unit.F(1e-4);  // x = 1e-16, F = x^2/2
  CHECK(tiny == doctest::Approx(5e-33).epsilon(1e-9));
  CHECK(tiny > 0.0);
  // odd symmetry of f, even primitive
  CHECK(nl.f(-0.9) == doctest::Approx(-nl.f(0.9)).epsilon(1e-14));
  CHECK(nl.F(-0.9) == doctest::Approx(nl.F(0.9)).epsilon(1e-14));

  CHECK_THROWS_AS(make_critical(0.0, 1.0, 4.0), std::invalid_argument);
  CHECK_THROWS_AS(make_critical(3.0, 0.0, 4.0), std::invalid_argument);
  CHECK_THROWS_AS(make_critical(3.0, 1.0, 1.0), std::invalid_argument);
}

TEST_CASE("superlinearity margin of the critical family") {
  // 2 (e^x - 1 - x) <= x (e^x - 1): convex with a double root at zero, so
  // theta = 2 gamma is the honest theta-condition constant
  const NonlinearitySpec nl = make_critical(2.0, 1.0, 4.0);
  for (double t = 0.05; t < 2.0; t += 0.07) {
    const double margin = t * nl.f(t) - 2.0 * nl.gamma * nl.F(t);
    CHECK(margin >= -1e-12 * std::max(1.0, t * nl.f(t)));
  }
}

TEST_CASE("hypothesis audit, subcritical") {
  const SobolevConstants c = constants(4, 0.5);
  const HypothesisReport rep = check_hypotheses(make_subcritical(5.0, 1.0), c);
  REQUIRE(rep.rows.size() >= 5);
  // a pure power cannot keep F <= M0 |f| for all large t: F/|f| = t/theta
  CHECK_FALSE(row(rep, "H4").satisfied);
  CHECK_FALSE(rep.all_satisfied);
  CHECK(row(rep, "H2").satisfied);
  CHECK(row(rep, "H3").satisfied);
}

TEST_CASE("hypothesis audit, critical at ratio 10") {
  const SobolevConstants c = constants(4, 0.5);
  const NonlinearitySpec nl =
      make_critical(10.0 * c.alpha_general, 1.0, c.gamma);
  // keep every sample finite: e^{alpha0 t^gamma} caps near t ~ (600/alpha0)^{1/gamma}
  const double t_max = std::min(4.0, std::pow(600.0 / nl.alpha0, 1.0 / nl.gamma));
  const HypothesisReport rep = check_hypotheses(nl, c, 1e-6, t_max);
  CHECK(rep.all_satisfied);
  for (const auto& r : rep.rows) CHECK(r.satisfied);
  CHECK(rep.gamma0_threshold ==
        doctest::Approx(1.0252982897087439).epsilon(1e-12));
  CHECK(rep.growth_q_constant > 0.0);
}

TEST_CASE("threshold constant bookkeeping") {
  const SobolevConstants c = constants(4, 0.5);
  // denominator identity: e^{N (1 - log 2e)} = 2^{-N}
  CHECK(std::exp(4.0 * (1.0 - std::log(2.0 * M_E))) ==
        doctest::Approx(1.0 / 16.0).epsilon(1e-14));
  // at alpha0 = alpha_beta the ratio collapses to 1 / (V_N 2^{-N}) = 32/pi^2
  const NonlinearitySpec at_alpha =
      make_critical(c.alpha_general, 1.0, c.gamma);
  const double t_max =
      std::min(4.0, std::pow(600.0 / at_alpha.alpha0, 1.0 / at_alpha.gamma));
  const HypothesisReport rep = check_hypotheses(at_alpha, c, 1e-6, t_max);
  CHECK(rep.gamma0_threshold ==
        doctest::Approx(32.0 / (M_PI * M_PI)).epsilon(1e-12));
  CHECK(rep.gamma0_threshold ==
        doctest::Approx(3.242277876554809).epsilon(1e-12));
}

TEST_CASE("hypothesis audit argument validation") {
  const SobolevConstants c = constants(4, 0.5);
  const NonlinearitySpec nl = make_subcritical(5.0, 1.0);
  CHECK_THROWS_AS(check_hypotheses(nl, c, 0.0, 4.0), std::invalid_argument);
  CHECK_THROWS_AS(check_hypotheses(nl, c, 1e-6, 4.0, 16),
                  std::invalid_argument);
  NonlinearitySpec empty;
  empty.f = nullptr;
  empty.F = nullptr;
  CHECK_THROWS_AS(check_hypotheses(empty, c), std::invalid_argument);
}
