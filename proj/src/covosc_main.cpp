// covosc: covariant oscillator toolkit
//
// Subcommands produce CSV or JSON on stdout (or --out); `verify` runs the
// built-in numerical checks. Exit codes: 0 success, 1 invalid input or I/O
// failure, 2 verification failure.

#include <exception>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "covosc/verify.hpp"

namespace {

void add_common_flags(CLI::App* cmd, covosc::RunConfig& config) {
  cmd->add_option("--format", config.format, "output format")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, covosc::OutputFormat>{{"csv", covosc::OutputFormat::csv},
                                                      {"json", covosc::OutputFormat::json}},
          CLI::ignore_case))
      ->default_str("csv");
  cmd->add_option("--out", config.output_path, "write output to this file instead of stdout");
}

void add_state_flags(CLI::App* cmd, covosc::RunConfig& config) {
  cmd->add_option("--n", config.n, "excitation level")->default_val(0);
  cmd->add_option("--eta", config.eta, "boost rapidity")->default_val(0.0);
}

void add_grid_flags(CLI::App* cmd, covosc::RunConfig& config) {
  cmd->add_option("--grid-range", config.grid_range,
                  "half-width of the export grid (default scales with n and eta)");
  cmd->add_option("--grid-count", config.grid_count, "odd node count per axis (default 201)");
}

void add_plot_flag(CLI::App* cmd, covosc::RunConfig& config) {
  cmd->add_option("--emit-plotscript", config.plotscript_path,
                  "also write a gnuplot script for the CSV output (requires --out)");
}

}  // namespace

int main(int argc, char** argv) {
  covosc::RunConfig config;

  CLI::App app{"covariant oscillator toolkit: boosted wave functions, momentum "
               "distributions, uncertainty products, and coherence times"};
  app.require_subcommand(1);
  app.set_config("--config", "", "read options from an INI file");

  CLI::App* wavefunction =
      app.add_subcommand("wavefunction", "sample the boosted wave function on a z-t grid");
  add_state_flags(wavefunction, config);
  add_grid_flags(wavefunction, config);
  add_common_flags(wavefunction, config);
  add_plot_flag(wavefunction, config);
  wavefunction->add_option("--threads", config.threads, "worker threads (result is thread-count independent)")
      ->default_val(1);

  CLI::App* momentum =
      app.add_subcommand("momentum", "sample the momentum-energy wave function on a q_z-q_0 grid");
  add_state_flags(momentum, config);
  add_grid_flags(momentum, config);
  add_common_flags(momentum, config);
  add_plot_flag(momentum, config);
  momentum->add_option("--threads", config.threads, "worker threads (result is thread-count independent)")
      ->default_val(1);

  CLI::App* moments = app.add_subcommand(
      "moments", "second moments and uncertainty products in both coordinate systems");
  add_state_flags(moments, config);
  add_common_flags(moments, config);
  moments->add_option("--mode", config.mode, "moment evaluation mode")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, covosc::MomentMode>{{"analytic", covosc::MomentMode::analytic},
                                                    {"quadrature", covosc::MomentMode::quadrature}},
          CLI::ignore_case))
      ->default_str("analytic");
  moments->add_option("--threads", config.threads, "worker threads (result is thread-count independent)")
      ->default_val(1);

  CLI::App* density =
      app.add_subcommand("density", "longitudinal probability density profile");
  add_state_flags(density, config);
  add_common_flags(density, config);
  add_plot_flag(density, config);
  density->add_option("--space", config.space, "which marginal to integrate")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, covosc::DensitySpace>{{"position", covosc::DensitySpace::position},
                                                      {"momentum", covosc::DensitySpace::momentum}},
          CLI::ignore_case))
      ->default_str("position");
  density->add_option("--threads", config.threads, "worker threads (result is thread-count independent)")
      ->default_val(1);

  CLI::App* coherence = app.add_subcommand(
      "coherence", "time-dilation and size-contraction factors for a hadron at a lab energy");
  coherence->add_option("--energy", config.energy_gev, "lab-frame energy in GeV")->required();
  coherence->add_option("--mass", config.mass_gev, "hadron mass in GeV")->default_val(0.938272);
  add_common_flags(coherence, config);

  CLI::App* verify = app.add_subcommand("verify", "run the built-in numerical checks");
  verify->add_option("--threads", config.threads, "worker threads (result is thread-count independent)")
      ->default_val(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);  // prints help or a one-line diagnostic
    return code == 0 ? 0 : 1;
  }

  if (wavefunction->parsed()) config.command = covosc::Command::wavefunction;
  if (momentum->parsed()) config.command = covosc::Command::momentum;
  if (moments->parsed()) config.command = covosc::Command::moments;
  if (density->parsed()) config.command = covosc::Command::density;
  if (coherence->parsed()) config.command = covosc::Command::coherence;
  if (verify->parsed()) config.command = covosc::Command::verify;

  try {
    return covosc::run(config);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
