#include "doctest.h"

#include <cmath>
#include <stdexcept>
#include <string>

#include "adamslab/weight.hpp"

using namespace adamslab;

namespace {

template <class Fn>
std::string error_of(Fn&& fn) {
  try {
    fn();
  } catch (const std::invalid_argument& e) {
    return e.what();
  }
  return "";
}

WeightSpec power_spec(double delta) {
  WeightSpec s;
  s.chi = ChiKind::Power;
  s.delta = delta;
  return s;
}

}  // namespace

TEST_CASE("validation names the offending field") {
  WeightSpec s;
  s.N = 5;
  CHECK(error_of([&] { validate(s); }).find("WeightSpec.N") !=
        std::string::npos);
  s = WeightSpec{};
  s.beta = 0.2;  // below the admissible interval at N = 4
  CHECK(error_of([&] { validate(s); }).find("WeightSpec.beta") !=
        std::string::npos);
  s.beta = 1.0;
  CHECK(error_of([&] { validate(s); }).find("WeightSpec.beta") !=
        std::string::npos);
  s = power_spec(0.0);
  CHECK(error_of([&] { validate(s); }).find("WeightSpec.delta") !=
        std::string::npos);
  s = power_spec(4.0);  // N^2/2 - N is excluded
  CHECK(error_of([&] { validate(s); }).find("WeightSpec.delta") !=
        std::string::npos);
  CHECK_NOTHROW(validate(power_spec(3.9)));
  s = WeightSpec{};
  s.chi = ChiKind::Log;
  s.sigma = 1.0;
  CHECK(error_of([&] { validate(s); }).find("WeightSpec.sigma") !=
        std::string::npos);
  s = WeightSpec{};
  s.chi_table = {{2.0, 1.0}};
  CHECK(error_of([&] { validate(s); }).find("chi_table") != std::string::npos);
  s.chi_table = {{1.0, 1.0}, {10.0, 0.5}};
  CHECK(error_of([&] { validate(s); }).find("chi_table") != std::string::npos);
  s.chi_table = {{1.0, 1.0}, {10.0, 3.0}, {5.0, 4.0}};
  CHECK(error_of([&] { validate(s); }).find("chi_table") != std::string::npos);
  s = WeightSpec{};
  s.M = 0.0;
  CHECK(error_of([&] { validate(s); }).find("WeightSpec.M") !=
        std::string::npos);
}

TEST_CASE("weight values inside and outside the unit ball") {
  WeightSpec s;  // N = 4, beta = 1/2: exponent beta (N/2 - 1) = 1/2
  CHECK(weight_eval(s, std::exp(-3.0)) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(weight_eval(s, 1.0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(weight_eval(s, 5.0) == 1.0);  // default bounded tail is chi == 1
  CHECK_THROWS_AS(weight_eval(s, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(weight_eval(s, -1.0), std::invalid_argument);
  CHECK_THROWS_AS(chi_eval(s, 0.5), std::invalid_argument);

  WeightSpec s6;
  s6.N = 6;
  s6.beta = 0.7;
  CHECK(weight_eval(s6, std::exp(-1.0)) ==
        doctest::Approx(std::pow(2.0, 1.4)).epsilon(1e-14));
}

TEST_CASE("tail families") {
  WeightSpec p = power_spec(2.0);
  CHECK(chi_eval(p, 1.0) == doctest::Approx(1.0));
  CHECK(chi_eval(p, 10.0) == doctest::Approx(100.0).epsilon(1e-14));

  WeightSpec l;
  l.chi = ChiKind::Log;
  l.sigma = 2.0;
  CHECK(chi_eval(l, 1.0) == doctest::Approx(1.0));
  CHECK(chi_eval(l, std::exp(1.0)) == doctest::Approx(2.0).epsilon(1e-14));

  WeightSpec t;
  t.chi_table = {{1.0, 1.0}, {10.0, 3.0}, {100.0, 5.0}};
  // piecewise linear in log r
  CHECK(chi_eval(t, std::sqrt(10.0)) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(chi_eval(t, std::pow(10.0, 1.5)) ==
        doctest::Approx(4.0).epsilon(1e-12));
  CHECK(chi_eval(t, 1e4) == doctest::Approx(5.0));  // constant beyond table
}

TEST_CASE("tail conditions, power delta = 1") {
  const ChiConditionReport rep = check_chi_conditions(power_spec(1.0));
  // first condition tends to 1/15 from below for chi = r
  CHECK(rep.sup[0] == doctest::Approx(0.066666666666666707).epsilon(1e-12));
  CHECK(std::abs(rep.sup[0] - 1.0 / 15.0) < 1e-9);
  // second condition peaks at r = (8/3)^{1/5}; the geometric scan lands close
  CHECK(rep.sup[1] == doctest::Approx(0.069354282801196182).epsilon(1e-12));
  CHECK(rep.sup[1] <= 0.06939509484134125 * (1.0 + 1e-12));
  CHECK(rep.sup[1] >= 0.06939509484134125 * 0.999);
  // doubling ratio of chi = r on [r, 4r] is exactly 4
  CHECK(rep.sup[2] == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(rep.all_pass());
  CHECK(rep.M == 8.0);
}

TEST_CASE("tail conditions, bounded chi == 1") {
  const ChiConditionReport rep = check_chi_conditions(WeightSpec{});
  CHECK(rep.sup[0] == doctest::Approx(0.0625).epsilon(1e-12));
  CHECK(rep.sup[1] == doctest::Approx(0.062371898962964689).epsilon(1e-12));
  CHECK(rep.sup[1] <= 0.0625 * (1.0 + 1e-12));
  CHECK(rep.sup[2] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(rep.all_pass());
}

TEST_CASE("tail conditions flag an unbounded integral") {
  // delta = N^2/2 - N makes the first condition grow like log r / 8; the
  // report is reachable because the scan does not pre-validate delta
  const ChiConditionReport rep =
      check_chi_conditions(power_spec(4.0), 1e3, 256);
  CHECK(rep.sup[0] == doctest::Approx(std::log(1e3) / 8.0).epsilon(1e-6));
  CHECK(rep.growing[0]);
  CHECK_FALSE(rep.all_pass());

  CHECK_THROWS_AS(check_chi_conditions(WeightSpec{}, 0.5),
                  std::invalid_argument);
  CHECK_THROWS_AS(check_chi_conditions(WeightSpec{}, 1e6, 8),
                  std::invalid_argument);
}

TEST_CASE("muckenhoupt products") {
  const MuckenhouptReport rep =
      muckenhoupt_probe(WeightSpec{}, {0.0}, {0.1, 1.0, 10.0});
  REQUIRE(rep.rows.size() == 3);
  CHECK(rep.rows[0].product ==
        doctest::Approx(1.0011024951821301).epsilon(1e-10));
  CHECK(rep.rows[1].product ==
        doctest::Approx(1.0078123557521788).epsilon(1e-10));
  CHECK(rep.rows[2].product ==
        doctest::Approx(1.0000018522291374).epsilon(1e-10));
  double mx = 0.0;
  for (const auto& r : rep.rows) {
    CHECK(r.product >= 1.0 - 1e-12);  // Cauchy-Schwarz floor at N = 4
    mx = std::max(mx, r.product);
  }
  CHECK(rep.max_product == doctest::Approx(mx).epsilon(1e-15));

  // a shell that never touches the log region sees a constant weight
  const MuckenhouptReport shell =
      muckenhoupt_probe(WeightSpec{}, {2.0}, {0.5});
  CHECK(shell.rows[0].product == doctest::Approx(1.0).epsilon(1e-12));

  CHECK_THROWS_AS(muckenhoupt_probe(WeightSpec{}, {-1.0}, {1.0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(muckenhoupt_probe(WeightSpec{}, {0.0}, {0.0}),
                  std::invalid_argument);
}
