#pragma once

// Command execution behind the covosc binary: translate a validated RunConfig
// into files or stdout bytes. Output is a pure function of the config: fixed
// formats, no timestamps, no locale dependence. Exit codes: 0 success, 1
// validation or I/O error (verification failures map to 2 in verify.hpp).

#include <cmath>
#include <fstream>
#include <iostream>
#include <ostream>
#include <string>

#include "covosc/analysis.hpp"
#include "covosc/errors.hpp"
#include "covosc/field_io.hpp"
#include "covosc/kinematics.hpp"
#include "covosc/momentum.hpp"
#include "covosc/numerics.hpp"
#include "covosc/oscillator.hpp"

namespace covosc {

enum class Command { wavefunction, momentum, moments, density, coherence, verify };
enum class OutputFormat { csv, json };
enum class DensitySpace { position, momentum };

struct RunConfig {
  Command command = Command::wavefunction;
  int n = 0;
  double eta = 0.0;
  double energy_gev = 0.0;
  double mass_gev = 0.938272;  // proton mass in GeV, overridable via --mass
  double grid_range = 0.0;     // 0 = support-sized default
  int grid_count = 0;          // 0 = 201 nodes per axis
  std::string output_path;     // empty = stdout
  OutputFormat format = OutputFormat::csv;
  MomentMode mode = MomentMode::analytic;
  DensitySpace space = DensitySpace::position;
  int threads = 1;
  std::string plotscript_path;  // empty = no script
};

namespace detail {

// export grids are for plotting, far coarser than the quadrature grids
inline Grid2D export_grid(const RunConfig& c) {
  if (c.grid_range < 0.0 || !std::isfinite(c.grid_range)) {
    throw invalid_parameter("grid-range must be positive");
  }
  const double range = c.grid_range > 0.0
                           ? c.grid_range
                           : (6.0 + 2.0 * std::sqrt(static_cast<double>(c.n))) *
                                 std::exp(std::abs(c.eta));
  const int count = c.grid_count > 0 ? c.grid_count : 201;
  const Grid1D axis{-range, range, count};
  validate_grid(axis);
  return Grid2D{axis, axis};
}

inline void require_grid_eta(double eta) {
  require_finite(eta, "eta");
  if (std::abs(eta) > ETA_MAX) {
    throw invalid_parameter("grid commands require |eta| <= " + std::to_string(ETA_MAX));
  }
}

inline void require_threads(int threads) {
  if (threads < 1 || threads > 256) {
    throw invalid_parameter("threads must lie in [1, 256]");
  }
}

// kind: 0 = 2D field CSV, 1 = 1D profile CSV
inline void write_plotscript(const std::string& script_path, const std::string& data_path,
                             int kind) {
  std::ofstream script(script_path, std::ios::binary);
  if (!script) throw io_error("cannot open --emit-plotscript path '" + script_path + "'");
  script << "# generic gnuplot script for a covosc CSV export\n"
         << "set datafile separator comma\n"
         << "set key off\n";
  if (kind == 0) {
    script << "set xlabel 'z'\nset ylabel 't'\n"
           << "splot '" << data_path << "' every ::1 using 1:2:3 with points pt 7 ps 0.4 palette\n";
  } else {
    script << "set xlabel 'coordinate'\nset ylabel 'density'\n"
           << "plot '" << data_path << "' every ::1 using 1:2 with lines\n";
  }
  script << "pause -1\n";
  if (!script) throw io_error("failed writing plotscript '" + script_path + "'");
}

template <class Writer>
void write_output(const RunConfig& c, Writer&& writer) {
  if (c.output_path.empty()) {
    writer(std::cout);
    std::cout.flush();
    return;
  }
  std::ofstream out(c.output_path, std::ios::binary);
  if (!out) throw io_error("cannot open --out path '" + c.output_path + "'");
  writer(out);
  out.flush();
  if (!out) throw io_error("failed writing --out path '" + c.output_path + "'");
}

inline void maybe_plotscript(const RunConfig& c, int kind) {
  if (c.plotscript_path.empty()) return;
  if (c.format != OutputFormat::csv || c.output_path.empty()) {
    throw invalid_parameter("emit-plotscript requires --format csv and an --out file");
  }
  write_plotscript(c.plotscript_path, c.output_path, kind);
}

inline void run_wavefunction(const RunConfig& c) {
  const OscillatorState state{c.n, Rapidity{c.eta}};
  validate_state(state);
  require_grid_eta(c.eta);
  const Grid2D grid = export_grid(c);
  const SampledField field = sample_field(
      grid, [&state](double z, double t) { return boosted_wavefunction(state, {z, t}).value; },
      c.threads);
  write_output(c, [&](std::ostream& out) {
    c.format == OutputFormat::csv ? write_field_csv(field, out) : write_field_json(field, out);
  });
  maybe_plotscript(c, 0);
}

inline void run_momentum(const RunConfig& c) {
  const OscillatorState state{c.n, Rapidity{c.eta}};
  validate_state(state);
  require_grid_eta(c.eta);
  const Grid2D grid = export_grid(c);
  const SampledField field =
      (c.n == 0) ? sample_field(
                       grid,
                       [&c](double qz, double q0) {
                         return momentum_wavefunction_ground(Rapidity{c.eta}, {qz, q0}).value;
                       },
                       c.threads)
                 : fourier_numeric(state, grid, c.threads);
  write_output(c, [&](std::ostream& out) {
    c.format == OutputFormat::csv ? write_field_csv(field, out) : write_field_json(field, out);
  });
  maybe_plotscript(c, 0);
}

inline void run_moments(const RunConfig& c) {
  const MomentReport report = uncertainty_products(c.n, Rapidity{c.eta}, c.mode, c.threads);
  write_output(c, [&](std::ostream& out) {
    c.format == OutputFormat::csv ? write_moments_csv(report, out)
                                  : write_moments_json(report, out);
  });
}

inline void run_density(const RunConfig& c) {
  const DensityProfile profile = (c.space == DensitySpace::position)
                                     ? longitudinal_position_density(c.n, Rapidity{c.eta}, c.threads)
                                     : longitudinal_momentum_density(c.n, Rapidity{c.eta}, c.threads);
  write_output(c, [&](std::ostream& out) {
    c.format == OutputFormat::csv ? write_profile_csv(profile, out)
                                  : write_profile_json(profile, out);
  });
  maybe_plotscript(c, 1);
}

inline void run_coherence(const RunConfig& c) {
  const CoherenceReport report = coherence_ratio(c.energy_gev, c.mass_gev);
  write_output(c, [&](std::ostream& out) {
    c.format == OutputFormat::csv ? write_coherence_csv(report, out)
                                  : write_coherence_json(report, out);
  });
}

}  // namespace detail

// executes every command except verify; returns the process exit code
inline int run_data_command(const RunConfig& config) {
  try {
    detail::require_threads(config.threads);
    switch (config.command) {
      case Command::wavefunction: detail::run_wavefunction(config); break;
      case Command::momentum: detail::run_momentum(config); break;
      case Command::moments: detail::run_moments(config); break;
      case Command::density: detail::run_density(config); break;
      case Command::coherence: detail::run_coherence(config); break;
      case Command::verify:
        throw invalid_parameter("verify is dispatched through run()");
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace covosc
