#pragma once

// Plain key=value run configuration. '#' starts a comment, lists are
// comma-separated, unknown keys are rejected. Every parse error is a single
// line naming the offending key and line number.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "adamslab/adams_profile.hpp"
#include "adamslab/nonlinearity.hpp"
#include "adamslab/weight.hpp"

namespace adamslab {

enum class Command {
  Constants,
  Norms,
  AdamsSweep,
  Sharpness,
  Solve,
  Hypotheses,
  Admissibility,
};

enum class ConventionChoice { General, FourDim, Both };

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  Command command = Command::Constants;
  int N = 4;
  double beta = 0.5;

  // weight tail
  ChiKind chi = ChiKind::Bounded;
  double delta = 1.0;
  double sigma = 2.0;
  std::vector<std::pair<double, double>> chi_table;  // empty means {{1,1}}
  double M = 8.0;      // admissibility bound for the tail conditions
  double r_max = 1e6;  // scan horizon for the tail conditions

  // grid
  double R = 8.0;
  std::size_t inner_count = 128;
  std::size_t outer_count = 128;
  double t_max = 12.0;

  // sweeps; empty lists fall back to per-command defaults in the runner
  std::vector<double> n_list;     // plain n
  std::vector<double> ln_n_list;  // log n; wins over n_list when set
  std::vector<double> alpha_ratio;
  std::vector<double> beta_list;  // constants sweep

  // profile experiment knobs
  ConventionChoice convention = ConventionChoice::Both;
  CapForm cap_form = CapForm::Printed;

  // nonlinearity
  NonlinearityKind nonlinearity = NonlinearityKind::SubcriticalPower;
  double lambda = 1.0;
  double theta = 5.0;
  double alpha0_ratio = 10.0;  // alpha0 = ratio * alpha_beta for the critical family

  // solver
  std::size_t knots = 32;
  std::size_t max_outer = 400;
  std::size_t max_newton = 60;
  double tol = 1e-8;
  std::uint64_t seed = 12345;
  std::size_t geometry_directions = 16;

  // output
  bool svg = true;
};

// Throws ConfigError on unknown key, type mismatch, or constraint violation.
RunConfig parse_config(const std::string& text);

// Throws ConfigError on an unknown command name.
Command command_from_string(const std::string& name);

const char* to_string(Command c);
const char* to_string(ConventionChoice c);

}  // namespace adamslab
