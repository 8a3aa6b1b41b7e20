#include "doctest.h"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "adamslab/adams_profile.hpp"
#include "adamslab/constants.hpp"
#include "adamslab/weight.hpp"

using namespace adamslab;

namespace {

const double kLn3 = std::log(1e3);

AdamsProfile desk_profile(CapForm form) {
  return adams_fn(kLn3, constants(4, 0.5), AlphaConvention::General, form);
}

}  // namespace

TEST_CASE("profile coefficients at desk scale") {
  const AdamsProfile p = desk_profile(CapForm::ContinuityFix);
  CHECK(p.gamma == doctest::Approx(4.0).epsilon(1e-14));
  CHECK(p.C == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  CHECK(p.L == doctest::Approx(1.0 + kLn3 / 4.0).epsilon(1e-14));
  CHECK(p.t_break1 == doctest::Approx(kLn3 / 4.0).epsilon(1e-14));
  CHECK(p.break1() == doctest::Approx(std::exp(-kLn3 / 4.0)).epsilon(1e-12));

  // zero beyond the unit ball, nonnegative and nonincreasing inside
  CHECK(p.value(1.2) == 0.0);
  double prev = p.value(1e-4);
  for (double r = 1e-3; r <= 1.0; r *= 1.3) {
    const double v = p.value(r);
    CHECK(v >= 0.0);
    CHECK(v <= prev * (1.0 + 1e-12));
    prev = v;
  }

  // log-variable evaluation matches the direct one in the cap
  for (double t : {2.0, 3.0, 5.0})
    CHECK(p.value_t(t) == doctest::Approx(p.value(std::exp(-t))).epsilon(1e-12));

  const RadialEvaluator ev = p.evaluator();
  CHECK(ev.value(0.3) == doctest::Approx(p.value(0.3)).epsilon(1e-14));
  CHECK(ev.deriv(0.3) == doctest::Approx(p.deriv(0.3)).epsilon(1e-14));

  CHECK_THROWS_AS(adams_fn(2.0, constants(4, 0.5), AlphaConvention::General,
                           CapForm::Printed),
                  std::invalid_argument);
}

TEST_CASE("piecewise norm parts at n = 1e3") {
  WeightSpec w;
  const FidelityReport fix = fidelity(desk_profile(CapForm::ContinuityFix), w);
  const FidelityReport pr = fidelity(desk_profile(CapForm::Printed), w);

  // cap, core, cutoff x weighted bilaplacian, gradient, L^{N/2}
  CHECK(fix.parts[0][0] == doctest::Approx(0.0070768866565249066).epsilon(1e-7));
  CHECK(fix.parts[1][0] == doctest::Approx(0.26429288966613784).epsilon(1e-7));
  CHECK(fix.parts[2][0] == doctest::Approx(25.178145685386568).epsilon(1e-7));
  CHECK(fix.parts[0][1] ==
        doctest::Approx(6.9396398146806522e-06).epsilon(1e-7));
  CHECK(fix.parts[1][1] ==
        doctest::Approx(0.0041113212996887472).epsilon(1e-7));
  CHECK(fix.parts[2][1] == doctest::Approx(0.49689202068350263).epsilon(1e-7));
  CHECK(fix.parts[0][2] ==
        doctest::Approx(0.00020912486763176869).epsilon(1e-7));
  CHECK(fix.parts[1][2] ==
        doctest::Approx(0.0089676742530745493).epsilon(1e-7));
  CHECK(fix.parts[2][2] == doctest::Approx(0.02115019887490998).epsilon(1e-7));
  CHECK(fix.norm_total == doctest::Approx(25.980852741327851).epsilon(1e-9));

  // the printed cap constant only changes the cap L^{N/2} piece
  CHECK(pr.parts[0][2] == doctest::Approx(0.00082981223594317459).epsilon(1e-7));
  CHECK(pr.parts[2][0] == doctest::Approx(fix.parts[2][0]).epsilon(1e-12));
  CHECK(pr.norm_total == doctest::Approx(25.981473428696162).epsilon(1e-9));

  // continuity audit: the fix form matches value and slope at the first
  // break, the printed form jumps there; the cubic end is seamless for both
  CHECK(std::abs(fix.gap_value_break1) < 1e-10);
  CHECK(pr.gap_value_break1 > 1e-4);
  CHECK(std::abs(fix.gap_value_half) < 1e-12);
  CHECK(std::abs(fix.gap_slope_half) < 1e-12);
  CHECK(std::abs(pr.gap_value_half) < 1e-12);

  // cap floor: the fix form attains the bound exactly, the printed form
  // sits above it
  CHECK(fix.cap_min == doctest::Approx(fix.cap_min_bound).epsilon(1e-12));
  CHECK(pr.cap_min >= pr.cap_min_bound * (1.0 - 1e-12));
}

TEST_CASE("norm trend over the desk sweep") {
  WeightSpec w;
  const std::vector<double> lns = {std::log(1e3), std::log(1e5),
                                   std::log(1e7)};
  const NormTrend tr = norm_trend(lns, 4, 0.5, w, CapForm::Printed);
  REQUIRE(tr.rows.size() == 3);
  CHECK(tr.decreasing_general);
  CHECK(tr.selected == AlphaConvention::General);
  CHECK(tr.rows[0].norm_total ==
        doctest::Approx(25.981473428696162).epsilon(1e-9));
  CHECK(tr.rows[1].norm_total ==
        doctest::Approx(21.967969862631001).epsilon(1e-9));
  CHECK(tr.rows[2].norm_total ==
        doctest::Approx(19.42617423822713).epsilon(1e-9));
  for (std::size_t i = 0; i + 1 < tr.rows.size(); ++i)
    CHECK(tr.rows[i + 1].dist_to_one < tr.rows[i].dist_to_one);

  // per-decade shrink factors of the five remainder parts: the cap parts
  // decay polynomially in n, the core/cutoff parts only logarithmically
  CHECK(tr.remainder_decade_factor[0] ==
        doctest::Approx(3.7176585935856421).epsilon(1e-6));
  CHECK(tr.remainder_decade_factor[1] ==
        doctest::Approx(12.580395833067136).epsilon(1e-6));
  CHECK(tr.remainder_decade_factor[2] ==
        doctest::Approx(1.0561604225823056).epsilon(1e-6));
  CHECK(tr.remainder_decade_factor[3] ==
        doctest::Approx(1.0795218457504629).epsilon(1e-6));
  // both cutoff parts scale with the same squared coefficient, so their
  // factors coincide
  CHECK(tr.remainder_decade_factor[4] ==
        doctest::Approx(tr.remainder_decade_factor[3]).epsilon(1e-12));
}

TEST_CASE("exponential blow-up dichotomy at far scale") {
  WeightSpec w;
  const SobolevConstants c = constants(4, 0.5);
  const std::vector<double> lns = {2e6, 2.5e6, 3e6, 3.5e6, 4e6};

  const BlowupTable low = blowup_probe(0.9, lns, c, w, AlphaConvention::General,
                                       CapForm::ContinuityFix);
  REQUIRE(low.rows.size() == 5);
  CHECK(low.rows.front().ln_value ==
        doctest::Approx(-394238.43902856007).epsilon(1e-9));
  CHECK(low.rows.back().ln_value ==
        doctest::Approx(-681478.00322236295).epsilon(1e-9));
  for (std::size_t i = 0; i + 1 < low.rows.size(); ++i)
    CHECK(low.rows[i + 1].ln_value < low.rows[i].ln_value);
  CHECK_FALSE(low.any_overflow);
  CHECK_FALSE(low.log_values_increasing);
  CHECK(low.max_over_first_log10 <= 1e-12);
  CHECK(low.rows.front().value == 0.0);  // underflows the double range

  const BlowupTable high = blowup_probe(1.1, lns, c, w, AlphaConvention::General,
                                        CapForm::ContinuityFix);
  CHECK(high.rows.front().ln_value ==
        doctest::Approx(-37402.891326593606).epsilon(1e-9));
  CHECK(high.rows.back().ln_value ==
        doctest::Approx(55970.97465875894).epsilon(1e-9));
  CHECK(high.log_values_increasing);
  CHECK(high.any_overflow);
  CHECK(high.max_over_first_log10 ==
        doctest::Approx((55970.97465875894 + 37402.891326593606) /
                        std::log(10.0))
            .epsilon(1e-9));
  CHECK(high.max_over_first_log10 > 10.0);

  for (std::size_t i = 0; i < lns.size(); ++i) {
    CHECK(low.rows[i].exponent_peak > 0.0);
    CHECK(high.rows[i].exponent_peak > low.rows[i].exponent_peak);
  }

  CHECK_THROWS_AS(blowup_probe(0.0, lns, c, w, AlphaConvention::General,
                               CapForm::ContinuityFix),
                  std::invalid_argument);
}

TEST_CASE("enum labels") {
  CHECK(to_string(CapForm::Printed) == std::string("printed"));
  CHECK(to_string(CapForm::ContinuityFix) == std::string("continuity_fix"));
  CHECK(to_string(AlphaConvention::General) == std::string("general"));
  CHECK(to_string(AlphaConvention::FourDim) == std::string("fourdim"));
}
