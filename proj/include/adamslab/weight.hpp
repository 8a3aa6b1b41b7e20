#pragma once

// The logarithmic weight family
//
//   w(r) = (log(e/r))^{beta (N/2 - 1)}   for r < 1,
//   w(r) = chi(r)                        for r >= 1,
//
// with chi continuous, chi(1) = 1, chi >= 1. Three tail families are
// supported: a bounded tail given by an explicit table, a power tail t^delta,
// and a log tail 1 + (log t)^sigma. Admissibility of the tail is probed by
// three integral conditions and a doubling-ratio condition; a Muckenhoupt-type
// product over balls and shells probes the A_{N/2} character of the whole
// weight.

#include <cstddef>
#include <string>
#include <vector>

namespace adamslab {

enum class ChiKind { Bounded, Power, Log };

struct WeightSpec {
  int N = 4;           // even, >= 4
  double beta = 0.5;   // in (beta_lower(N), 1)
  ChiKind chi = ChiKind::Bounded;
  double delta = 1.0;  // power tail exponent, in (0, N^2/2 - N)
  double sigma = 2.0;  // log tail exponent, > 1
  // bounded tail: piecewise-linear in log r through (r_k, chi_k); must start
  // at (1, 1); constant beyond the last point. Defaults to chi == 1.
  std::vector<std::pair<double, double>> chi_table = {{1.0, 1.0}};
  // admissibility constant the tail conditions are compared against
  double M = 8.0;
};

// Lower endpoint of the admissible beta interval, (N^2-4N+2)/(N(N-2)).
double beta_lower(int N);

// Throws std::invalid_argument naming the offending field.
void validate(const WeightSpec& spec);

double chi_eval(const WeightSpec& spec, double r);   // r >= 1
double weight_eval(const WeightSpec& spec, double r);  // r > 0

// Tail admissibility. For each integral condition the supremum over a
// geometric r-grid in [1, r_max] is reported together with a trend flag that
// fires when the running supremum is still growing over the last decade
// (an unbounded condition).
struct ChiConditionReport {
  double sup[3] = {0, 0, 0};     // conditions in the order listed above
  bool bounded[3] = {false, false, false};  // sup <= spec.M
  bool growing[3] = {false, false, false};
  double M = 0.0;
  double r_max = 0.0;
  bool all_pass() const {
    return bounded[0] && bounded[1] && bounded[2] && !growing[0] &&
           !growing[1] && !growing[2];
  }
};
ChiConditionReport check_chi_conditions(const WeightSpec& spec,
                                        double r_max = 1e6,
                                        std::size_t samples = 512);

// Muckenhoupt-type product  avg_B(w) * avg_B(w^{-1})^{N/2-1}.
// A center of 0 means the ball B(0, radius); a nonzero center is probed by
// the spherical shell |c - radius| <= r <= c + radius, the annular proxy the
// off-center estimates reduce to.
struct MuckenhouptRow {
  double center = 0.0;
  double radius = 0.0;
  double product = 0.0;
};
struct MuckenhouptReport {
  std::vector<MuckenhouptRow> rows;
  double max_product = 0.0;
};
MuckenhouptReport muckenhoupt_probe(const WeightSpec& spec,
                                    const std::vector<double>& centers,
                                    const std::vector<double>& radii);

std::string to_string(ChiKind k);

}  // namespace adamslab
