#include "adamslab/runner.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <memory>
#include <sstream>
#include <thread>

#include "adamslab/adams_profile.hpp"
#include "adamslab/csv_writer.hpp"
#include "adamslab/energy.hpp"
#include "adamslab/functional.hpp"
#include "adamslab/mountain_pass.hpp"
#include "adamslab/svg_plot.hpp"

namespace adamslab {

namespace {

unsigned thread_cap() {
  unsigned cap = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("ADAMS_LAB_THREADS")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end && *end == '\0' && v >= 1)
      cap = static_cast<unsigned>(std::min<unsigned long>(cap, v));
  }
  return cap;
}

// runs fn(0..count-1); each index writes only its own result slot, so the
// merged output does not depend on the thread count
template <typename Fn>
void parallel_for(std::size_t count, Fn&& fn) {
  const std::size_t cap = std::min<std::size_t>(thread_cap(), count);
  if (cap <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(cap);
  for (std::size_t t = 0; t < cap; ++t)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) fn(i);
    });
  for (auto& th : pool) th.join();
}

WeightSpec weight_of(const RunConfig& cfg) {
  WeightSpec w;
  w.N = cfg.N;
  w.beta = cfg.beta;
  w.chi = cfg.chi;
  w.delta = cfg.delta;
  w.sigma = cfg.sigma;
  if (!cfg.chi_table.empty()) w.chi_table = cfg.chi_table;
  w.M = cfg.M;
  validate(w);
  return w;
}

std::vector<AlphaConvention> conventions_of(const RunConfig& cfg) {
  if (cfg.convention == ConventionChoice::General)
    return {AlphaConvention::General};
  if (cfg.convention == ConventionChoice::FourDim) {
    if (cfg.N != 4)
      throw std::invalid_argument("convention fourdim requires N = 4");
    return {AlphaConvention::FourDim};
  }
  if (cfg.N == 4)
    return {AlphaConvention::General, AlphaConvention::FourDim};
  return {AlphaConvention::General};
}

AlphaConvention single_convention(const RunConfig& cfg) {
  return conventions_of(cfg).front();
}

std::string join(const std::string& dir, const char* name) {
  return (std::filesystem::path(dir) / name).string();
}

void add_file(RunArtifacts& art, bool quiet, const std::string& path) {
  art.files.push_back(path);
  if (!quiet) std::cout << "wrote " << path << "\n";
}

std::string num(double v) { return format_number(v); }

std::string sanitize(std::string s) {
  for (char& c : s)
    if (c == ',' || c == '\n') c = ';';
  return s;
}

NonlinearitySpec nonlinearity_of(const RunConfig& cfg,
                                 const SobolevConstants& c,
                                 AlphaConvention conv) {
  if (cfg.nonlinearity == NonlinearityKind::SubcriticalPower)
    return make_subcritical(cfg.theta, cfg.lambda);
  return make_critical(cfg.alpha0_ratio * c.alpha(conv), cfg.lambda, c.gamma);
}

void cmd_constants(const RunConfig& cfg, const std::string& out,
                   RunArtifacts& art, bool quiet) {
  std::vector<double> betas = cfg.beta_list;
  if (betas.empty())
    betas = {0.9, 0.75, 0.5, 1.0 / 3.0, 0.3, 0.25, 0.1, 0.01, 1e-3, 1e-4,
             1e-6};
  std::vector<SobolevConstants> rows(betas.size());
  parallel_for(betas.size(),
               [&](std::size_t i) { rows[i] = constants(cfg.N, betas[i]); });

  const std::string path = join(out, "constants.csv");
  CsvWriter csv(path, {"N", "beta", "gamma", "alpha_general", "alpha_fourdim",
                       "V_N", "omega", "beta_low"});
  for (const auto& c : rows)
    csv.row({static_cast<double>(c.N), c.beta, c.gamma, c.alpha_general,
             c.alpha_fourdim, c.V_N, c.omega, c.beta_low});
  add_file(art, quiet, path);

  if (cfg.svg) {
    Series g{"alpha_general", {}, {}}, f{"alpha_fourdim", {}, {}};
    for (const auto& c : rows) {
      g.x.push_back(c.beta);
      g.y.push_back(c.alpha_general);
      f.x.push_back(c.beta);
      f.y.push_back(c.alpha_fourdim);
    }
    const std::string svg = join(out, "constants.svg");
    write_svg_plot(svg, "sharp exponent vs beta", {g, f});
    add_file(art, quiet, svg);
  }
  art.message = "constants: " + std::to_string(rows.size()) + " rows";
}

void cmd_norms(const RunConfig& cfg, const std::string& out, RunArtifacts& art,
               bool quiet) {
  const WeightSpec w = weight_of(cfg);
  const SobolevConstants c = constants(cfg.N, cfg.beta);
  const std::vector<double> lns = effective_ln_n(cfg);
  const std::vector<AlphaConvention> convs = conventions_of(cfg);

  const std::size_t total = convs.size() * lns.size();
  std::vector<FidelityReport> reps(total);
  parallel_for(total, [&](std::size_t i) {
    const AlphaConvention conv = convs[i / lns.size()];
    const double ln = lns[i % lns.size()];
    reps[i] = fidelity(adams_fn(ln, c, conv, cfg.cap_form), w);
  });

  const std::string path = join(out, "norms.csv");
  CsvWriter csv(
      path, {"convention", "cap_form", "ln_n", "norm_total", "dist_to_one",
             "cap_bil", "cap_grad", "cap_lp", "core_bil", "core_grad",
             "core_lp", "cut_bil", "cut_grad", "cut_lp", "gap_value_break1",
             "gap_slope_break1", "gap_value_half", "gap_slope_half", "cap_min",
             "cap_min_bound"});
  for (std::size_t i = 0; i < total; ++i) {
    const FidelityReport& r = reps[i];
    csv.row_mixed({to_string(r.convention), to_string(r.cap_form),
                   num(r.ln_n), num(r.norm_total),
                   num(std::abs(r.norm_total - 1.0)), num(r.parts[0][0]),
                   num(r.parts[0][1]), num(r.parts[0][2]), num(r.parts[1][0]),
                   num(r.parts[1][1]), num(r.parts[1][2]), num(r.parts[2][0]),
                   num(r.parts[2][1]), num(r.parts[2][2]),
                   num(r.gap_value_break1), num(r.gap_slope_break1),
                   num(r.gap_value_half), num(r.gap_slope_half),
                   num(r.cap_min), num(r.cap_min_bound)});
  }
  add_file(art, quiet, path);

  // per-convention trend summary; the remainder parts are the five pieces
  // that must vanish for the norm to settle at 1
  const int pick[5][2] = {{0, 0}, {0, 1}, {1, 1}, {2, 0}, {2, 1}};
  bool decreasing[2] = {false, false};
  const std::string sum_path = join(out, "norms_summary.csv");
  CsvWriter sum(sum_path,
                {"convention", "cap_form", "strictly_decreasing",
                 "factor_cap_bil", "factor_cap_grad", "factor_core_grad",
                 "factor_cut_bil", "factor_cut_grad", "selected"});
  std::vector<std::vector<std::string>> sum_rows;
  for (std::size_t ci = 0; ci < convs.size(); ++ci) {
    const FidelityReport* first = &reps[ci * lns.size()];
    const FidelityReport* last = &reps[ci * lns.size() + lns.size() - 1];
    bool down = lns.size() >= 2;
    for (std::size_t j = 1; j < lns.size(); ++j) {
      const double prev = std::abs(reps[ci * lns.size() + j - 1].norm_total - 1.0);
      const double cur = std::abs(reps[ci * lns.size() + j].norm_total - 1.0);
      if (!(cur < prev)) down = false;
    }
    decreasing[ci] = down;
    const double decades = (last->ln_n - first->ln_n) / std::log(10.0);
    std::vector<std::string> row = {to_string(convs[ci]),
                                    to_string(cfg.cap_form),
                                    num(down ? 1.0 : 0.0)};
    for (const auto& pk : pick) {
      const double a = first->parts[pk[0]][pk[1]];
      const double b = last->parts[pk[0]][pk[1]];
      row.push_back(num(a > 0.0 && b > 0.0 && decades > 0.0
                            ? std::pow(a / b, 1.0 / decades)
                            : 0.0));
    }
    sum_rows.push_back(row);
  }
  // the general convention is preferred unless only the other one settles
  const std::size_t sel =
      (convs.size() == 2 && !decreasing[0] && decreasing[1]) ? 1 : 0;
  for (std::size_t ci = 0; ci < sum_rows.size(); ++ci) {
    sum_rows[ci].push_back(num(ci == sel ? 1.0 : 0.0));
    sum.row_mixed(sum_rows[ci]);
  }
  add_file(art, quiet, sum_path);

  if (cfg.svg) {
    std::vector<Series> series;
    for (std::size_t ci = 0; ci < convs.size(); ++ci) {
      Series s{std::string("dist ") + to_string(convs[ci]), {}, {}};
      for (std::size_t j = 0; j < lns.size(); ++j) {
        s.x.push_back(lns[j]);
        s.y.push_back(std::abs(reps[ci * lns.size() + j].norm_total - 1.0));
      }
      series.push_back(std::move(s));
    }
    const std::string svg = join(out, "norms.svg");
    write_svg_plot(svg, "|norm - 1| vs log n", series);
    add_file(art, quiet, svg);
  }
  std::ostringstream msg;
  msg << "norms: " << total << " rows selected="
      << to_string(convs[sel]);
  art.message = msg.str();
}

void cmd_adams_sweep(const RunConfig& cfg, const std::string& out,
                     RunArtifacts& art, bool quiet) {
  const SobolevConstants c = constants(cfg.N, cfg.beta);
  const std::vector<AlphaConvention> convs = conventions_of(cfg);
  std::vector<double> ratios = cfg.alpha_ratio;
  if (ratios.empty())
    ratios = {0.001, 0.0025, 0.005, 0.01, 0.025, 0.05, 0.1, 0.2, 0.3, 0.4,
              0.5};

  auto grid = std::make_shared<const RadialGrid>(build_grid(
      cfg.N, cfg.R, cfg.inner_count, cfg.outer_count, cfg.t_max));
  RadialEvaluator bump;
  bump.value = [](double r) {
    return r < 1.0 ? (1.0 - r * r) * (1.0 - r * r) : 0.0;
  };
  bump.deriv = [](double r) { return r < 1.0 ? -4.0 * r * (1.0 - r * r) : 0.0; };
  bump.deriv2 = [](double r) { return r < 1.0 ? -4.0 + 12.0 * r * r : 0.0; };
  const RadialFunction u = sample_on_grid(grid, bump);

  const std::size_t total = convs.size() * ratios.size();
  std::vector<AdamsValue> vals(total);
  parallel_for(total, [&](std::size_t i) {
    const AlphaConvention conv = convs[i / ratios.size()];
    const double ratio = ratios[i % ratios.size()];
    vals[i] =
        adams_functional(u, ratio * c.alpha(conv), c.gamma, cfg.N, 0.0, 1.0);
  });

  const std::string path = join(out, "adams_sweep.csv");
  CsvWriter csv(path, {"convention", "alpha_ratio", "alpha", "value",
                       "max_exponent", "overflow"});
  for (std::size_t i = 0; i < total; ++i) {
    const AlphaConvention conv = convs[i / ratios.size()];
    const double ratio = ratios[i % ratios.size()];
    csv.row_mixed({to_string(conv), num(ratio), num(ratio * c.alpha(conv)),
                   num(vals[i].value), num(vals[i].max_exponent),
                   num(vals[i].overflow ? 1.0 : 0.0)});
  }
  add_file(art, quiet, path);

  if (cfg.svg) {
    std::vector<Series> series;
    for (std::size_t ci = 0; ci < convs.size(); ++ci) {
      Series s{std::string("log10(1+value) ") + to_string(convs[ci]), {}, {}};
      for (std::size_t j = 0; j < ratios.size(); ++j) {
        s.x.push_back(ratios[j]);
        s.y.push_back(std::log10(1.0 + vals[ci * ratios.size() + j].value));
      }
      series.push_back(std::move(s));
    }
    const std::string svg = join(out, "adams_sweep.svg");
    write_svg_plot(svg, "exponential functional vs alpha ratio", series);
    add_file(art, quiet, svg);
  }
  art.message = "adams-sweep: " + std::to_string(total) + " rows";
}

void cmd_sharpness(const RunConfig& cfg, const std::string& out,
                   RunArtifacts& art, bool quiet) {
  const WeightSpec w = weight_of(cfg);
  const SobolevConstants c = constants(cfg.N, cfg.beta);
  const std::vector<double> lns = effective_ln_n(cfg);
  std::vector<double> ratios = cfg.alpha_ratio;
  if (ratios.empty()) ratios = {0.9, 1.1};

  AlphaConvention conv;
  if (cfg.convention == ConventionChoice::Both) {
    // defer to the desk-scale norm trend for the convention choice
    const std::vector<double> desk = {std::log(1e3), std::log(1e5),
                                      std::log(1e7)};
    conv = norm_trend(desk, cfg.N, cfg.beta, w, cfg.cap_form).selected;
  } else {
    conv = single_convention(cfg);
  }

  std::vector<BlowupTable> tables(ratios.size());
  parallel_for(ratios.size(), [&](std::size_t i) {
    tables[i] = blowup_probe(ratios[i], lns, c, w, conv, cfg.cap_form);
  });

  const std::string path = join(out, "sharpness.csv");
  CsvWriter csv(path,
                {"convention", "cap_form", "alpha_ratio", "ln_n",
                 "exponent_peak", "ln_value", "value", "overflow", "verdict"});
  for (std::size_t i = 0; i < tables.size(); ++i) {
    const BlowupTable& t = tables[i];
    std::string verdict = "indeterminate";
    if (t.any_overflow ||
        (t.log_values_increasing && t.max_over_first_log10 >= 1.0))
      verdict = "blow-up";
    else if (t.max_over_first_log10 <= 1.0)
      verdict = "bounded";
    for (const BlowupRow& r : t.rows)
      csv.row_mixed({to_string(conv), to_string(cfg.cap_form),
                     num(t.alpha_ratio), num(r.ln_n), num(r.exponent_peak),
                     num(r.ln_value), num(r.value),
                     num(r.overflow ? 1.0 : 0.0), verdict});
  }
  add_file(art, quiet, path);

  if (cfg.svg) {
    std::vector<Series> series;
    for (const BlowupTable& t : tables) {
      Series s{"ratio " + num(t.alpha_ratio), {}, {}};
      for (const BlowupRow& r : t.rows) {
        s.x.push_back(r.ln_n);
        s.y.push_back(r.ln_value);
      }
      series.push_back(std::move(s));
    }
    const std::string svg = join(out, "sharpness.svg");
    write_svg_plot(svg, "log functional vs log n", series);
    add_file(art, quiet, svg);
  }
  art.message =
      "sharpness: " + std::to_string(ratios.size() * lns.size()) + " rows";
}

void cmd_solve(const RunConfig& cfg, const std::string& out, RunArtifacts& art,
               bool quiet) {
  const WeightSpec w = weight_of(cfg);
  const SobolevConstants c = constants(cfg.N, cfg.beta);
  const AlphaConvention conv = cfg.convention == ConventionChoice::Both
                                   ? AlphaConvention::General
                                   : single_convention(cfg);
  auto grid = std::make_shared<const RadialGrid>(build_grid(
      cfg.N, cfg.R, cfg.inner_count, cfg.outer_count, cfg.t_max));
  const EnergyModel model = make_energy_model(grid, w);
  const NonlinearitySpec nl = nonlinearity_of(cfg, c, conv);

  SolveOptions opt;
  opt.knots = cfg.knots;
  opt.max_outer = cfg.max_outer;
  opt.max_newton = cfg.max_newton;
  opt.tol = cfg.tol;
  opt.seed = cfg.seed;
  opt.geometry_directions = cfg.geometry_directions;
  const SolveResult res = mountain_pass_solve(model, nl, c, conv, opt);

  const std::string path = join(out, "solve.csv");
  CsvWriter csv(path, {"nonlinearity", "convention", "theta", "lambda",
                       "alpha0", "level", "residual", "norm", "rho",
                       "ring_min", "t_neg", "outer_iters", "newton_iters",
                       "converged", "ps_bound", "below_bound"});
  csv.row_mixed({to_string(nl.kind), to_string(conv), num(nl.theta),
                 num(nl.lambda), num(nl.alpha0), num(res.level),
                 num(res.residual), num(res.norm), num(res.geometry.rho),
                 num(res.geometry.ring_min), num(res.geometry.t_neg),
                 num(static_cast<double>(res.outer_iters)),
                 num(static_cast<double>(res.newton_iters)),
                 num(res.converged ? 1.0 : 0.0), num(res.ps_bound),
                 num(res.below_bound ? 1.0 : 0.0)});
  add_file(art, quiet, path);

  const std::string hist_path = join(out, "solve_history.csv");
  CsvWriter hist(hist_path, {"iter", "level", "residual", "step", "knot"});
  for (const SolveHistoryRow& r : res.history)
    hist.row({static_cast<double>(r.iter), r.level, r.residual, r.step,
              static_cast<double>(r.knot)});
  add_file(art, quiet, hist_path);

  const std::string sol_path = join(out, "solution.csv");
  CsvWriter sol(sol_path, {"r", "u"});
  for (std::size_t i = 0; i < grid->size(); ++i)
    sol.row({grid->r[i], res.u[i]});
  add_file(art, quiet, sol_path);

  if (cfg.svg) {
    Series su{"u(r)", grid->r, res.u};
    const std::string svg1 = join(out, "solve_solution.svg");
    write_svg_plot(svg1, "pass point", {su});
    add_file(art, quiet, svg1);
    Series sr{"log10 residual", {}, {}};
    for (const SolveHistoryRow& r : res.history) {
      sr.x.push_back(static_cast<double>(r.iter));
      sr.y.push_back(std::log10(std::max(r.residual, 1e-300)));
    }
    const std::string svg2 = join(out, "solve_history.svg");
    write_svg_plot(svg2, "residual vs iteration", {sr});
    add_file(art, quiet, svg2);
  }

  if (!res.geometry.valid) {
    art.exit_code = 2;
    art.message = "solve: geometry not found (ring_min <= 0 or no negative "
                  "direction); try smaller lambda";
  } else if (!res.converged) {
    art.exit_code = 2;
    art.message = "solve: iteration cap reached; residual=" +
                  num(res.residual);
  } else {
    std::ostringstream msg;
    msg << "solve: converged level=" << num(res.level)
        << " residual=" << num(res.residual) << " norm=" << num(res.norm);
    art.message = msg.str();
  }
}

void cmd_hypotheses(const RunConfig& cfg, const std::string& out,
                    RunArtifacts& art, bool quiet) {
  const SobolevConstants c = constants(cfg.N, cfg.beta);
  const AlphaConvention conv = cfg.convention == ConventionChoice::Both
                                   ? AlphaConvention::General
                                   : single_convention(cfg);
  const NonlinearitySpec nl = nonlinearity_of(cfg, c, conv);
  // keep every sampled f/F finite: cap the range so alpha0 t^gamma <= 600
  const double t_max =
      nl.kind == NonlinearityKind::CriticalExp
          ? std::min(4.0, std::pow(600.0 / nl.alpha0, 1.0 / nl.gamma))
          : 4.0;
  const HypothesisReport rep = check_hypotheses(nl, c, 1e-6, t_max, 2000);

  const std::string path = join(out, "hypotheses.csv");
  CsvWriter csv(path, {"id", "satisfied", "witness", "detail"});
  for (const HypothesisRow& r : rep.rows)
    csv.row_mixed({r.id, num(r.satisfied ? 1.0 : 0.0), num(r.witness),
                   sanitize(r.detail)});
  add_file(art, quiet, path);

  const std::string sum_path = join(out, "hypotheses_summary.csv");
  CsvWriter sum(sum_path,
                {"kind", "theta", "alpha0", "gamma0_threshold",
                 "growth_q_constant", "all_satisfied", "t_min", "t_max",
                 "samples"});
  sum.row_mixed({to_string(nl.kind), num(nl.theta), num(nl.alpha0),
                 num(rep.gamma0_threshold), num(rep.growth_q_constant),
                 num(rep.all_satisfied ? 1.0 : 0.0), num(1e-6), num(t_max),
                 num(2000.0)});
  add_file(art, quiet, sum_path);

  art.message = std::string("hypotheses: all_satisfied=") +
                (rep.all_satisfied ? "1" : "0");
}

void cmd_admissibility(const RunConfig& cfg, const std::string& out,
                       RunArtifacts& art, bool quiet) {
  const WeightSpec w = weight_of(cfg);
  const ChiConditionReport rep = check_chi_conditions(w, cfg.r_max, 512);

  const std::string path = join(out, "chi_conditions.csv");
  CsvWriter csv(path,
                {"condition", "sup", "bounded", "growing", "M", "r_max"});
  for (int i = 0; i < 3; ++i)
    csv.row({static_cast<double>(i + 1), rep.sup[i],
             rep.bounded[i] ? 1.0 : 0.0, rep.growing[i] ? 1.0 : 0.0, rep.M,
             rep.r_max});
  add_file(art, quiet, path);

  const MuckenhouptReport muck =
      muckenhoupt_probe(w, {0.0, 2.0}, {0.1, 1.0, 10.0});
  const std::string muck_path = join(out, "muckenhoupt.csv");
  CsvWriter mcsv(muck_path, {"center", "radius", "product"});
  for (const MuckenhouptRow& r : muck.rows)
    mcsv.row({r.center, r.radius, r.product});
  add_file(art, quiet, muck_path);

  std::ostringstream msg;
  msg << "admissibility: all_pass=" << (rep.all_pass() ? 1 : 0)
      << " max_muckenhoupt=" << num(muck.max_product);
  art.message = msg.str();
}

}  // namespace

std::vector<double> effective_ln_n(const RunConfig& cfg) {
  std::vector<double> out;
  if (!cfg.ln_n_list.empty()) {
    out = cfg.ln_n_list;
  } else if (!cfg.n_list.empty()) {
    out.reserve(cfg.n_list.size());
    for (double n : cfg.n_list) out.push_back(std::log(n));
  } else if (cfg.command == Command::Sharpness) {
    out = {2e6, 2.5e6, 3e6, 3.5e6, 4e6};
  } else {
    out = {std::log(1e3), std::log(1e5), std::log(1e7)};
  }
  std::sort(out.begin(), out.end());
  return out;
}

RunArtifacts run_command(const RunConfig& cfg, const std::string& out_dir,
                         bool quiet) {
  RunArtifacts art;
  try {
    std::filesystem::create_directories(out_dir);
    switch (cfg.command) {
      case Command::Constants:
        cmd_constants(cfg, out_dir, art, quiet);
        break;
      case Command::Norms:
        cmd_norms(cfg, out_dir, art, quiet);
        break;
      case Command::AdamsSweep:
        cmd_adams_sweep(cfg, out_dir, art, quiet);
        break;
      case Command::Sharpness:
        cmd_sharpness(cfg, out_dir, art, quiet);
        break;
      case Command::Solve:
        cmd_solve(cfg, out_dir, art, quiet);
        break;
      case Command::Hypotheses:
        cmd_hypotheses(cfg, out_dir, art, quiet);
        break;
      case Command::Admissibility:
        cmd_admissibility(cfg, out_dir, art, quiet);
        break;
    }
  } catch (const std::exception& e) {
    art.exit_code = 1;
    art.message = std::string("error: ") + e.what();
  }
  return art;
}

}  // namespace adamslab
