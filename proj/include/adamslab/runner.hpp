#pragma once

// Command dispatch: runs one configured experiment, writes CSV tables (and
// SVG plots unless disabled) under out_dir, and reports a process exit code.
// Output is deterministic: fixed seeds, fixed column order, 17 significant
// digits, LF endings. Sweep points may be computed in parallel (capped by
// ADAMS_LAB_THREADS) but rows are emitted in sweep order.

#include <string>
#include <vector>

#include "adamslab/run_config.hpp"

namespace adamslab {

struct RunArtifacts {
  int exit_code = 0;               // 0 ok, 1 validation error, 2 numerical failure
  std::vector<std::string> files;  // paths written, in emission order
  std::string message;             // single-line status or error
};

RunArtifacts run_command(const RunConfig& cfg, const std::string& out_dir,
                         bool quiet);

// Effective log-n sweep: ln_n_list if set, else log of n_list, else the
// per-command default (desk scale for norms, far scale for sharpness).
std::vector<double> effective_ln_n(const RunConfig& cfg);

}  // namespace adamslab
