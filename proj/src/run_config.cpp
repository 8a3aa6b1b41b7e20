#include "adamslab/run_config.hpp"

#include <cmath>
#include <cstdint>
#include <map>
#include <sstream>

namespace adamslab {

namespace {

[[noreturn]] void fail(int line, const std::string& msg) {
  if (line > 0)
    throw ConfigError("config line " + std::to_string(line) + ": " + msg);
  throw ConfigError("config: " + msg);
}

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

double to_double(const std::string& key, int line, const std::string& v) {
  try {
    std::size_t pos = 0;
    const double d = std::stod(v, &pos);
    if (pos != v.size() || !std::isfinite(d)) throw std::invalid_argument("");
    return d;
  } catch (const ConfigError&) {
    throw;
  } catch (...) {
    fail(line, "key '" + key + "' expects a finite number, got '" + v + "'");
  }
}

long long to_int(const std::string& key, int line, const std::string& v) {
  try {
    std::size_t pos = 0;
    const long long n = std::stoll(v, &pos);
    if (pos != v.size()) throw std::invalid_argument("");
    return n;
  } catch (const ConfigError&) {
    throw;
  } catch (...) {
    fail(line, "key '" + key + "' expects an integer, got '" + v + "'");
  }
}

std::size_t to_count(const std::string& key, int line, const std::string& v,
                     long long least) {
  const long long n = to_int(key, line, v);
  if (n < least)
    fail(line, "key '" + key + "' must be >= " + std::to_string(least));
  return static_cast<std::size_t>(n);
}

std::uint64_t to_u64(const std::string& key, int line, const std::string& v) {
  try {
    std::size_t pos = 0;
    const unsigned long long n = std::stoull(v, &pos);
    if (pos != v.size()) throw std::invalid_argument("");
    return n;
  } catch (const ConfigError&) {
    throw;
  } catch (...) {
    fail(line, "key '" + key + "' expects an unsigned integer, got '" + v +
                   "'");
  }
}

bool to_bool(const std::string& key, int line, const std::string& v) {
  if (v == "true") return true;
  if (v == "false") return false;
  fail(line, "key '" + key + "' expects true or false, got '" + v + "'");
}

std::vector<std::string> split(const std::string& v, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(v);
  while (std::getline(in, cur, sep)) out.push_back(trim(cur));
  return out;
}

std::vector<double> to_list(const std::string& key, int line,
                            const std::string& v) {
  std::vector<double> out;
  for (const auto& piece : split(v, ',')) {
    if (piece.empty())
      fail(line, "key '" + key + "' expects a comma-separated list");
    out.push_back(to_double(key, line, piece));
  }
  if (out.empty())
    fail(line, "key '" + key + "' expects a comma-separated list");
  return out;
}

std::vector<std::pair<double, double>> to_pairs(const std::string& key,
                                                int line,
                                                const std::string& v) {
  std::vector<std::pair<double, double>> out;
  for (const auto& piece : split(v, ',')) {
    const auto colon = piece.find(':');
    if (colon == std::string::npos)
      fail(line, "key '" + key + "' expects r:value pairs");
    out.emplace_back(to_double(key, line, trim(piece.substr(0, colon))),
                     to_double(key, line, trim(piece.substr(colon + 1))));
  }
  if (out.empty()) fail(line, "key '" + key + "' expects r:value pairs");
  return out;
}

std::string fmt(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

}  // namespace

RunConfig parse_config(const std::string& text) {
  RunConfig cfg;
  std::map<std::string, int> where;  // key -> line, for cross-field checks

  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    const auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    const std::string line = trim(raw);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) fail(lineno, "expected key=value");
    const std::string key = trim(line.substr(0, eq));
    const std::string val = trim(line.substr(eq + 1));
    if (key.empty()) fail(lineno, "expected key=value");
    if (val.empty()) fail(lineno, "key '" + key + "' has no value");
    if (!where.emplace(key, lineno).second)
      fail(lineno, "duplicate key '" + key + "'");

    if (key == "command") {
      try {
        cfg.command = command_from_string(val);
      } catch (const ConfigError&) {
        fail(lineno, "unknown command '" + val + "'");
      }
    } else if (key == "N") {
      const long long n = to_int(key, lineno, val);
      if (n < 4 || n % 2 != 0)
        fail(lineno, "N must be an even integer >= 4");
      cfg.N = static_cast<int>(n);
    } else if (key == "beta") {
      cfg.beta = to_double(key, lineno, val);
    } else if (key == "chi") {
      if (val == "bounded")
        cfg.chi = ChiKind::Bounded;
      else if (val == "power")
        cfg.chi = ChiKind::Power;
      else if (val == "log")
        cfg.chi = ChiKind::Log;
      else
        fail(lineno, "key 'chi' expects bounded, power, or log");
    } else if (key == "delta") {
      cfg.delta = to_double(key, lineno, val);
    } else if (key == "sigma") {
      cfg.sigma = to_double(key, lineno, val);
      if (!(cfg.sigma > 1.0)) fail(lineno, "sigma must be > 1");
    } else if (key == "chi_table") {
      cfg.chi_table = to_pairs(key, lineno, val);
    } else if (key == "M") {
      cfg.M = to_double(key, lineno, val);
      if (!(cfg.M > 0.0)) fail(lineno, "M must be > 0");
    } else if (key == "r_max") {
      cfg.r_max = to_double(key, lineno, val);
      if (!(cfg.r_max > 1.0)) fail(lineno, "r_max must be > 1");
    } else if (key == "R") {
      cfg.R = to_double(key, lineno, val);
      if (!(cfg.R > 1.0)) fail(lineno, "R must be > 1");
    } else if (key == "inner_count") {
      cfg.inner_count = to_count(key, lineno, val, 8);
    } else if (key == "outer_count") {
      cfg.outer_count = to_count(key, lineno, val, 8);
    } else if (key == "t_max") {
      cfg.t_max = to_double(key, lineno, val);
      if (!(cfg.t_max > 0.0)) fail(lineno, "t_max must be > 0");
    } else if (key == "n_list") {
      cfg.n_list = to_list(key, lineno, val);
      for (double n : cfg.n_list)
        if (!(n > 1.0)) fail(lineno, "n_list entries must be > 1");
    } else if (key == "ln_n_list") {
      cfg.ln_n_list = to_list(key, lineno, val);
      for (double n : cfg.ln_n_list)
        if (!(n > 0.0)) fail(lineno, "ln_n_list entries must be > 0");
    } else if (key == "alpha_ratio") {
      cfg.alpha_ratio = to_list(key, lineno, val);
      for (double a : cfg.alpha_ratio)
        if (!(a > 0.0)) fail(lineno, "alpha_ratio entries must be > 0");
    } else if (key == "beta_list") {
      cfg.beta_list = to_list(key, lineno, val);
      for (double b : cfg.beta_list)
        if (!(b > 0.0 && b < 1.0))
          fail(lineno, "beta_list entries must lie in (0, 1)");
    } else if (key == "convention") {
      if (val == "general")
        cfg.convention = ConventionChoice::General;
      else if (val == "fourdim")
        cfg.convention = ConventionChoice::FourDim;
      else if (val == "both")
        cfg.convention = ConventionChoice::Both;
      else
        fail(lineno, "key 'convention' expects general, fourdim, or both");
    } else if (key == "cap_form") {
      if (val == "printed")
        cfg.cap_form = CapForm::Printed;
      else if (val == "continuity_fix")
        cfg.cap_form = CapForm::ContinuityFix;
      else
        fail(lineno, "key 'cap_form' expects printed or continuity_fix");
    } else if (key == "nonlinearity") {
      if (val == "subcritical")
        cfg.nonlinearity = NonlinearityKind::SubcriticalPower;
      else if (val == "critical")
        cfg.nonlinearity = NonlinearityKind::CriticalExp;
      else
        fail(lineno, "key 'nonlinearity' expects subcritical or critical");
    } else if (key == "lambda") {
      cfg.lambda = to_double(key, lineno, val);
      if (!(cfg.lambda > 0.0)) fail(lineno, "lambda must be > 0");
    } else if (key == "theta") {
      cfg.theta = to_double(key, lineno, val);
      if (!(cfg.theta > 2.0)) fail(lineno, "theta must be > 2");
    } else if (key == "alpha0_ratio") {
      cfg.alpha0_ratio = to_double(key, lineno, val);
      if (!(cfg.alpha0_ratio > 0.0)) fail(lineno, "alpha0_ratio must be > 0");
    } else if (key == "knots") {
      cfg.knots = to_count(key, lineno, val, 4);
    } else if (key == "max_outer") {
      cfg.max_outer = to_count(key, lineno, val, 1);
    } else if (key == "max_newton") {
      cfg.max_newton = to_count(key, lineno, val, 1);
    } else if (key == "tol") {
      cfg.tol = to_double(key, lineno, val);
      if (!(cfg.tol > 0.0)) fail(lineno, "tol must be > 0");
    } else if (key == "seed") {
      cfg.seed = to_u64(key, lineno, val);
    } else if (key == "geometry_directions") {
      cfg.geometry_directions = to_count(key, lineno, val, 1);
    } else if (key == "svg") {
      cfg.svg = to_bool(key, lineno, val);
    } else {
      fail(lineno, "unknown key '" + key + "'");
    }
  }

  // cross-field constraints; report the line the offending key came from
  const double lo = beta_lower(cfg.N);
  if (!(cfg.beta > lo && cfg.beta < 1.0)) {
    const auto it = where.find("beta");
    fail(it != where.end() ? it->second : 0,
         "beta must lie in (" + fmt(lo) + ", 1) for N = " +
             std::to_string(cfg.N));
  }
  const double dmax = cfg.N * cfg.N / 2.0 - cfg.N;
  if (!(cfg.delta > 0.0 && cfg.delta < dmax)) {
    const auto it = where.find("delta");
    fail(it != where.end() ? it->second : 0,
         "delta must lie in (0, " + fmt(dmax) + ") for N = " +
             std::to_string(cfg.N));
  }
  if (!cfg.chi_table.empty()) {
    const auto it = where.find("chi_table");
    const int line = it != where.end() ? it->second : 0;
    if (cfg.chi_table.front() != std::make_pair(1.0, 1.0))
      fail(line, "chi_table must start at 1:1");
    for (std::size_t i = 0; i < cfg.chi_table.size(); ++i) {
      if (!(cfg.chi_table[i].second > 0.0))
        fail(line, "chi_table values must be > 0");
      if (i > 0 && !(cfg.chi_table[i].first > cfg.chi_table[i - 1].first))
        fail(line, "chi_table radii must be strictly increasing");
    }
  }
  return cfg;
}

Command command_from_string(const std::string& name) {
  for (Command c : {Command::Constants, Command::Norms, Command::AdamsSweep,
                    Command::Sharpness, Command::Solve, Command::Hypotheses,
                    Command::Admissibility}) {
    if (name == to_string(c)) return c;
  }
  throw ConfigError("unknown command '" + name + "'");
}

const char* to_string(Command c) {
  switch (c) {
    case Command::Constants: return "constants";
    case Command::Norms: return "norms";
    case Command::AdamsSweep: return "adams-sweep";
    case Command::Sharpness: return "sharpness";
    case Command::Solve: return "solve";
    case Command::Hypotheses: return "hypotheses";
    case Command::Admissibility: return "admissibility";
  }
  return "?";
}

const char* to_string(ConventionChoice c) {
  switch (c) {
    case ConventionChoice::General: return "general";
    case ConventionChoice::FourDim: return "fourdim";
    case ConventionChoice::Both: return "both";
  }
  return "?";
}

}  // namespace adamslab
