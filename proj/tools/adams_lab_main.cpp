#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "adamslab/runner.hpp"

int main(int argc, char** argv) {
  CLI::App app{
      "adams-lab: numerical experiments around a log-weighted fourth-order "
      "inequality and its mountain-pass problem"};
  std::string command;
  std::string config_path;
  std::string out_dir = "out";
  bool quiet = false;
  app.add_option("command", command,
                 "one of: constants, norms, adams-sweep, sharpness, solve, "
                 "hypotheses, admissibility")
      ->required();
  app.add_option("--config", config_path, "key=value config file")
      ->required();
  app.add_option("--out", out_dir, "output directory (default: out)");
  app.add_flag("--quiet", quiet, "suppress progress output");
  CLI11_PARSE(app, argc, argv);

  adamslab::RunConfig cfg;
  try {
    std::ifstream in(config_path, std::ios::binary);
    if (!in) {
      std::cerr << "error: cannot read config " << config_path << "\n";
      return 1;
    }
    std::ostringstream text;
    text << in.rdbuf();
    cfg = adamslab::parse_config(text.str());
    cfg.command = adamslab::command_from_string(command);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  const adamslab::RunArtifacts art =
      adamslab::run_command(cfg, out_dir, quiet);
  if (art.exit_code != 0)
    std::cerr << art.message << "\n";
  else if (!quiet && !art.message.empty())
    std::cout << art.message << "\n";
  return art.exit_code;
}
