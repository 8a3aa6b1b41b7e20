#include "adamslab/constants.hpp"

#include <cmath>
#include <stdexcept>

#include "adamslab/quadrature.hpp"
#include "adamslab/weight.hpp"

namespace adamslab {

SobolevConstants constants(int N, double beta) {
  if (N < 4 || N % 2 != 0)
    throw std::invalid_argument("constants: N must be even and >= 4");
  if (!(beta > 0.0 && beta < 1.0))
    throw std::invalid_argument("constants: beta must lie in (0, 1)");
  const double pi = 3.14159265358979323846;
  SobolevConstants c;
  c.N = N;
  c.beta = beta;
  c.V_N = unit_ball_volume(N);
  c.omega = N * c.V_N;
  c.beta_low = beta_lower(N);
  c.gamma = N / ((N - 2) * (1.0 - beta));
  c.alpha_general = N *
                    std::pow((N - 2) * N * c.V_N,
                             2.0 / ((N - 2) * (1.0 - beta))) *
                    std::pow(1.0 - beta, 1.0 / (1.0 - beta));
  c.alpha_fourdim =
      N == 4 ? 4.0 * std::pow(8.0 * pi * pi * (1.0 - beta), 1.0 / (1.0 - beta))
             : 0.0;
  return c;
}

std::string to_string(AlphaConvention c) {
  return c == AlphaConvention::General ? "general" : "fourdim";
}

}  // namespace adamslab
