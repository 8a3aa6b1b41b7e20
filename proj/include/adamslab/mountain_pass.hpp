#pragma once

// Mountain-pass machinery: ring geometry certificate, the min-max descent on
// a discrete path from 0 past the ring, and a Newton polish of the pass
// point. The compactness ceiling (2/N)(alpha_beta/alpha_0)^{N/(2 gamma)}
// applies to the critical family; subcritical problems have no ceiling.

#include <cstdint>
#include <vector>

#include "adamslab/energy.hpp"

namespace adamslab {

struct GeometryCertificate {
  double rho = 0.0;       // ring radius in the E-norm
  double ring_min = 0.0;  // min of J over sampled directions at ||u|| = rho
  double t_neg = 0.0;     // scale with J(t_neg * dir) < 0
  double j_at_tneg = 0.0;
  std::size_t directions = 0;
  std::uint64_t seed = 0;
  bool valid = false;     // ring_min > 0 and j_at_tneg < 0
};

GeometryCertificate find_geometry(const EnergyModel& m,
                                  const NonlinearitySpec& nl,
                                  std::size_t directions = 16,
                                  std::uint64_t seed = 12345);

struct SolveOptions {
  std::size_t knots = 32;        // path discretization
  std::size_t max_outer = 400;   // deformation sweeps
  std::size_t max_newton = 60;
  double tol = 1e-8;             // weak-residual target
  std::uint64_t seed = 12345;
  std::size_t geometry_directions = 16;
};

struct SolveHistoryRow {
  std::size_t iter = 0;
  double level = 0.0;      // current path maximum of J
  double residual = 0.0;   // weak residual at the maximizing knot
  double step = 0.0;       // accepted line-search step
  std::size_t knot = 0;    // maximizing knot index (ties: lowest)
};

struct SolveResult {
  std::vector<double> u;   // pass point, nodal values
  double level = 0.0;      // J(u)
  double residual = 0.0;   // weak residual at u
  double norm = 0.0;       // ||u||_E
  std::size_t outer_iters = 0;
  std::size_t newton_iters = 0;
  bool converged = false;
  double ps_bound = 0.0;   // compactness ceiling; +inf for subcritical
  bool below_bound = false;
  GeometryCertificate geometry;
  std::vector<SolveHistoryRow> history;
};

SolveResult mountain_pass_solve(const EnergyModel& m,
                                const NonlinearitySpec& nl,
                                const SobolevConstants& c,
                                AlphaConvention conv,
                                const SolveOptions& opt = {});

}  // namespace adamslab
