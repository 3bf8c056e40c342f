#include <CLI11.hpp>
#include <iostream>

#include "vpsdof/cli.hpp"
#include "vpsdof/errors.hpp"

namespace {

void add_source_flags(CLI::App* cmd, vpsdof::cli::Source& src) {
  auto* config = cmd->add_option("--config", src.config_path,
                                 "Run configuration file");
  auto* preset = cmd->add_option("--preset", src.preset, "Named preset");
  config->excludes(preset);
  cmd->add_option("--t-end", src.t_end, "Final time");
  cmd->add_option("--dt", src.dt, "Time step override");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized trapezoidal integration of a lumped "
               "elasto-viscoplastic (Bingham/Norton) oscillator"};
  app.require_subcommand(1);

  vpsdof::cli::Source run_src;
  std::string run_out;
  auto* run = app.add_subcommand("run", "Simulate one configuration");
  add_source_flags(run, run_src);
  run->add_option("--storage-stride", run_src.storage_stride,
                  "Store every n-th step");
  run->add_option("--out", run_out, "Trajectory CSV")->required();

  vpsdof::cli::Source conv_src;
  std::string conv_out;
  std::string conv_dts;
  double conv_dt_ref = 0.0;
  auto* converge = app.add_subcommand(
      "converge", "Error against an implicit Euler reference over several dt");
  add_source_flags(converge, conv_src);
  converge->add_option("--dts", conv_dts, "Comma-separated time steps")
      ->required();
  converge->add_option("--dt-ref", conv_dt_ref, "Reference time step")
      ->required();
  converge->add_option("--out", conv_out, "Convergence table CSV")->required();

  std::vector<std::string> cmp_configs;
  std::vector<std::string> cmp_presets;
  std::optional<double> cmp_t_end;
  std::optional<double> cmp_dt;
  std::optional<double> cmp_dt_ref;
  std::string cmp_out;
  auto* compare = app.add_subcommand(
      "compare",
      "Run two configurations on a common grid. Configs come before presets "
      "in the a/b order.");
  compare->add_option("--config", cmp_configs, "Configuration file")
      ->expected(1)
      ->take_all();
  compare->add_option("--preset", cmp_presets, "Named preset")
      ->expected(1)
      ->take_all();
  compare->add_option("--t-end", cmp_t_end, "Final time for both runs");
  compare->add_option("--dt", cmp_dt, "Time step override for run a");
  compare->add_option("--dt-ref", cmp_dt_ref, "Time step override for run b");
  compare->add_option("--out", cmp_out, "Side-by-side CSV")->required();

  auto* preset = app.add_subcommand("preset", "Inspect built-in presets");
  preset->require_subcommand(1);
  preset->add_subcommand("list", "List preset names");
  std::string show_name;
  auto* show = preset->add_subcommand("show", "Print a preset as config text");
  show->add_option("name", show_name, "Preset name")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) return vpsdof::cli::cmd_run(run_src, run_out, std::cout, std::cerr);
    if (*converge) {
      const auto dts = vpsdof::cli::parse_number_list(conv_dts);
      return vpsdof::cli::cmd_converge(conv_src, dts, conv_dt_ref, conv_out,
                                       std::cout, std::cerr);
    }
    if (*compare) {
      std::vector<vpsdof::cli::Source> sources;
      for (const auto& c : cmp_configs) sources.push_back({.config_path = c});
      for (const auto& p : cmp_presets) sources.push_back({.preset = p});
      if (sources.size() != 2) {
        std::cerr << "error: compare needs exactly two of --config/--preset\n";
        return 2;
      }
      for (auto& s : sources) s.t_end = cmp_t_end;
      sources[0].dt = cmp_dt;
      sources[1].dt = cmp_dt_ref;
      return vpsdof::cli::cmd_compare(sources[0], sources[1], cmp_out,
                                      std::cout, std::cerr);
    }
    if (*preset) {
      if (*show)
        return vpsdof::cli::cmd_preset_show(show_name, std::cout, std::cerr);
      return vpsdof::cli::cmd_preset_list(std::cout);
    }
  } catch (const vpsdof::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
