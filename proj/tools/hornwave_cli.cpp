// hornwave: traveling waves in a flaring duct, from the analytic profile to a
// finite-volume cross-check.
//
//   hornwave <shape|roots|profile|simulate|validate|sweep> [--config FILE]
//            [--out DIR] [--set key=value ...]

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hornwave/commands.hpp"
#include "hornwave/config.hpp"
#include "hornwave/errors.hpp"
#include "hornwave/io.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Traveling waves of the gas-dynamics equations in a flaring duct"};
  app.require_subcommand(1, 1);

  std::string config_path;
  std::string out_dir;
  std::vector<std::string> overrides;
  const std::vector<std::pair<std::string, std::string>> commands = {
      {"shape", "tabulate the bore (x, a, r)"},
      {"roots", "anchor roots, branch velocities and the shock check"},
      {"profile", "assemble one period of the composite traveling wave"},
      {"simulate", "finite-volume run from the wavetrain initial condition"},
      {"validate", "run every invariant and write a pass/fail report"},
      {"sweep", "repeat sweep_command over a parameter grid"}};
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("--config", config_path, "flat key = value configuration file");
    sub->add_option("--out", out_dir, "output directory (overrides output_dir)");
    sub->add_option("--set", overrides, "override a configuration key, key=value")->take_all();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : hornwave::kExitConfig;
  }
  const std::string command = app.get_subcommands().front()->get_name();

  hornwave::RunConfig config;
  try {
    const std::string text = config_path.empty() ? std::string() : hornwave::io::read_file(config_path);
    auto raw = hornwave::parse_raw(text);
    for (const auto& o : overrides) hornwave::apply_override(raw, o);
    if (!out_dir.empty()) raw["output_dir"] = {out_dir, 0};
    config = hornwave::build_config(raw);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return hornwave::exit_code_for(e);
  }
  return hornwave::run_command(command, config, std::cerr);
}
