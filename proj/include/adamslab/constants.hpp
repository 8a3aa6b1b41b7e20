#pragma once

// Dimensional constants and the two published forms of the sharp exponent.
//
// gamma = N / ((N-2)(1-beta)) drives the exponential growth e^{alpha |u|^gamma}.
// The two alpha_beta forms agree in shape but differ by a factor inside the
// bracket at N = 4 (4 pi^2 vs 8 pi^2); both are carried side by side and every
// experiment records which one it used.

#include <string>

namespace adamslab {

enum class AlphaConvention { General, FourDim };

struct SobolevConstants {
  int N = 4;
  double beta = 0.5;
  double gamma = 4.0;          // N / ((N-2)(1-beta))
  double alpha_general = 0.0;  // N [(N-2) N V_N]^{2/((N-2)(1-beta))} (1-beta)^{1/(1-beta)}
  double alpha_fourdim = 0.0;  // 4 [8 pi^2 (1-beta)]^{1/(1-beta)}, N = 4 only (0 otherwise)
  double V_N = 0.0;            // unit ball volume
  double omega = 0.0;          // sphere area N V_N
  double beta_low = 0.0;       // lower endpoint of the admissible beta range

  double alpha(AlphaConvention c) const {
    return c == AlphaConvention::General ? alpha_general : alpha_fourdim;
  }
};

// Requires N even, N >= 4, beta in (0, 1). The closed forms are defined on
// all of (0, 1) and the fourdim limit 32 pi^2 sits at beta -> 0+, so the
// domain here is wider than the weight's admissible interval; compare beta
// against beta_low when the weight itself is in play.
SobolevConstants constants(int N, double beta);

std::string to_string(AlphaConvention c);

}  // namespace adamslab
