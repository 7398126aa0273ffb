#pragma once

// Full verification suite: one pass/fail line per criterion, exit 0 when all
// pass, 2 otherwise. The report is plain text, deterministic, and prints the
// competing momentum-exponent sign conventions next to the measured one.

#include <unistd.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "covosc/cli.hpp"

namespace covosc {

namespace detail {

inline std::string fmt3(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.3g", v);
  return buf;
}

struct Criterion {
  bool pass = false;
  std::string label;
  std::string detail;
};

inline const std::vector<double>& boost_set() {
  static const std::vector<double> etas{0.0, 0.5, 1.0, 2.0};
  return etas;
}

// criteria 1 and 2 share the quadrature moment reports
inline std::vector<MomentReport> quadrature_reports(int threads) {
  std::vector<MomentReport> reports;
  for (const double eta : boost_set()) {
    reports.push_back(uncertainty_products(0, Rapidity{eta}, MomentMode::quadrature, threads));
  }
  return reports;
}

inline Criterion criterion_product_zq(const std::vector<MomentReport>& reports) {
  Criterion c;
  c.label = "uncertainty product <z^2><q_z^2> follows cosh^2(2 eta)/4 (n=0, eta in {0,0.5,1,2})";
  double worst = 0.0;
  for (const MomentReport& r : reports) {
    const double ch = std::cosh(2.0 * r.eta);
    worst = std::max(worst, std::abs(r.product_zq - 0.25 * ch * ch));
  }
  c.pass = worst < 1e-4;
  c.detail = "max |error| = " + fmt3(worst) + " (tol 1e-4)";
  return c;
}

inline Criterion criterion_product_lightcone(const std::vector<MomentReport>& reports) {
  Criterion c;
  c.label = "light-cone uncertainty products <u^2><q_u^2>, <v^2><q_v^2> stay at 1/4";
  double worst = 0.0;
  for (const MomentReport& r : reports) {
    worst = std::max(worst, std::abs(r.product_uqu - 0.25));
    worst = std::max(worst, std::abs(r.product_vqv - 0.25));
  }
  c.pass = worst < 1e-4;
  c.detail = "max |product - 1/4| = " + fmt3(worst) + " (tol 1e-4)";
  return c;
}

inline Criterion criterion_norm(int threads) {
  Criterion c;
  c.label = "boost preserves wave-function norm (n in 0..5, eta in {0,0.5,1,2})";
  double worst = 0.0;
  int worst_n = 0;
  double worst_eta = 0.0;
  for (int n = 0; n <= 5; ++n) {
    for (const double eta : boost_set()) {
      const OscillatorState s{n, Rapidity{eta}};
      const Grid2D g = default_grid(s.eta, s.n);
      const double norm = integrate_2d_windowed(
          g,
          [&s](double z, double t) {
            const double a = boosted_wavefunction(s, {z, t}).value;
            return a * a;
          },
          [&s, &g](int i) { return squeeze_window(s.eta, g.axis_t, g.axis_z.node(i)); }, threads);
      const double err = std::abs(norm - 1.0);
      if (err > worst) {
        worst = err;
        worst_n = n;
        worst_eta = eta;
      }
    }
  }
  c.pass = worst <= 1e-6;
  c.detail = "worst |norm - 1| = " + fmt3(worst) + " at n=" + std::to_string(worst_n) +
             ", eta=" + fmt3(worst_eta) + " (tol 1e-6)";
  return c;
}

inline Criterion criterion_fourier(int threads, std::string& convention_info) {
  Criterion c;
  c.label = "numeric transform matches the closed form pointwise and conserves norm (n=0)";
  double worst_point = 0.0;
  double worst_parseval = 0.0;
  for (const double eta : {0.0, 0.5, 1.0}) {
    const double stretch = std::exp(eta);
    const Grid1D axis = symmetric_axis(6.0 * stretch, 0.6 / stretch);
    const Grid2D q_grid{axis, axis};
    const FourierResult fr = fourier_numeric_detailed({0, Rapidity{eta}}, q_grid, threads);
    double parseval = 0.0;
    for (int k = 0; k < axis.count; ++k) {
      double row = 0.0;
      for (int l = 0; l < axis.count; ++l) {
        const double numeric = fr.field.value_at(k, l);
        const double closed =
            momentum_wavefunction_ground(Rapidity{eta}, {axis.node(k), axis.node(l)}).value;
        worst_point = std::max(worst_point, std::abs(numeric - closed));
        row += axis.weight(l) * numeric * numeric;
      }
      parseval += axis.weight(k) * row;
    }
    worst_parseval = std::max(worst_parseval, std::abs(parseval - 1.0));

    if (eta == 1.0) {
      // exponent convention probe: coefficients c_u, c_v in
      // exp(-(c_u q_u^2 + c_v q_v^2)/2), measured on the light-cone axes
      const int mid = (axis.count - 1) / 2;
      const double h = axis.spacing();
      const double peak = fr.field.value_at(mid, mid);
      const double on_u_axis = fr.field.value_at(mid - 3, mid + 3);  // q_v = 0
      const double on_v_axis = fr.field.value_at(mid - 3, mid - 3);  // q_u = 0
      const double q2 = 18.0 * h * h;  // squared light-cone component at both probes
      const double measured_cu = -2.0 * std::log(on_u_axis / peak) / q2;
      const double measured_cv = -2.0 * std::log(on_v_axis / peak) / q2;
      const double e2 = std::exp(2.0), em2 = std::exp(-2.0);
      convention_info =
          "info: momentum exponent conventions at eta=1: transform of the kernel "
          "exp(-i(q_z z - q_0 t)) predicts (c_u, c_v) = (e^{+2 eta}, e^{-2 eta}) = (" +
          fmt3(e2) + ", " + fmt3(em2) +
          "); the opposite-label convention predicts (" + fmt3(em2) + ", " + fmt3(e2) +
          "); measured (" + fmt3(measured_cu) + ", " + fmt3(measured_cv) + ")";
    }
  }
  c.pass = worst_point <= 1e-6 && worst_parseval <= 1e-5;
  c.detail = "max pointwise |error| = " + fmt3(worst_point) +
             " (tol 1e-6), max |norm - 1| = " + fmt3(worst_parseval) + " (tol 1e-5)";
  return c;
}

inline Criterion criterion_eigenvalue(int threads) {
  Criterion c;
  c.label = "oscillator-equation eigenvalue stays at n under boosts (n in 0..2, eta in {0,1})";
  double worst_lambda = 0.0;
  double worst_residual = 0.0;
  for (int n = 0; n <= 2; ++n) {
    for (const double eta : {0.0, 1.0}) {
      const OscillatorState s{n, Rapidity{eta}};
      const auto [lambda, residual] = oscillator_residual(s, default_grid(s.eta, s.n), threads);
      worst_lambda = std::max(worst_lambda, std::abs(lambda - static_cast<double>(n)));
      worst_residual = std::max(worst_residual, residual);
    }
  }
  c.pass = worst_lambda <= 1e-2 && worst_residual < 5e-3;
  c.detail = "max |lambda - n| = " + fmt3(worst_lambda) +
             " (tol 1e-2), max residual = " + fmt3(worst_residual) + " (tol 5e-3)";
  return c;
}

inline Criterion criterion_coherence() {
  Criterion c;
  c.label = "coherence ratio for a 900 GeV proton is a vanishing fraction of the period";
  const CoherenceReport r = coherence_ratio(900.0, 0.938272);
  c.pass = r.eta >= 7.5 && r.eta <= 7.62 && r.ratio > 1e-8 && r.ratio < 1e-5;
  c.detail = "eta = " + fmt3(r.eta) + " (window [7.5, 7.62]), ratio = " + fmt3(r.ratio) +
             " (window (1e-8, 1e-5))";
  return c;
}

inline Criterion criterion_marginals(int threads) {
  Criterion c;
  c.label = "marginal variances equal cosh(2 eta)/2 in both spaces and grow with eta (n=0)";
  double worst = 0.0;
  bool increasing = true;
  double prev_pos = -1.0, prev_mom = -1.0;
  for (const double eta : boost_set()) {
    const double expected = 0.5 * std::cosh(2.0 * eta);
    const double vp = profile_variance(longitudinal_position_density(0, Rapidity{eta}, threads));
    const double vm = profile_variance(longitudinal_momentum_density(0, Rapidity{eta}, threads));
    worst = std::max({worst, std::abs(vp - expected), std::abs(vm - expected)});
    increasing = increasing && vp > prev_pos && vm > prev_mom;
    prev_pos = vp;
    prev_mom = vm;
  }
  c.pass = worst <= 1e-4 && increasing;
  c.detail = "max |variance - cosh(2 eta)/2| = " + fmt3(worst) + " (tol 1e-4), strictly increasing: " +
             (increasing ? "yes" : "no");
  return c;
}

inline Criterion criterion_kinematics() {
  Criterion c;
  c.label = "kinematics invariants over 1000 randomized boosts (tol 1e-10)";
  std::mt19937_64 rng(20250817ull);
  std::uniform_real_distribution<double> coord(-3.0, 3.0);
  std::uniform_real_distribution<double> rap(-2.0, 2.0);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const SpacetimePoint p{coord(rng), coord(rng)};
    const Rapidity a{rap(rng)}, b{rap(rng)};

    // boosts compose by adding rapidities, in both representations
    const SpacetimePoint two_step = boost_spacetime(boost_spacetime(p, a), b);
    const SpacetimePoint one_step = boost_spacetime(p, Rapidity{a.eta + b.eta});
    worst = std::max(worst, std::abs(two_step.z - one_step.z) / std::max(1.0, std::abs(one_step.z)));
    worst = std::max(worst, std::abs(two_step.t - one_step.t) / std::max(1.0, std::abs(one_step.t)));
    const LightConePoint lc = to_light_cone(p);
    const LightConePoint lc_two = boost_light_cone(boost_light_cone(lc, a), b);
    const LightConePoint lc_one = boost_light_cone(lc, Rapidity{a.eta + b.eta});
    worst = std::max(worst, std::abs(lc_two.u - lc_one.u) / std::max(1.0, std::abs(lc_one.u)));
    worst = std::max(worst, std::abs(lc_two.v - lc_one.v) / std::max(1.0, std::abs(lc_one.v)));

    // light-cone round trip
    const SpacetimePoint back = from_light_cone(lc);
    worst = std::max(worst, std::abs(back.z - p.z));
    worst = std::max(worst, std::abs(back.t - p.t));

    // interval and light-cone product invariance
    const SpacetimePoint boosted = boost_spacetime(p, a);
    const double interval = p.z * p.z - p.t * p.t;
    const double interval_b = boosted.z * boosted.z - boosted.t * boosted.t;
    worst = std::max(worst, std::abs(interval_b - interval) / std::max(1.0, std::abs(interval)));
    const LightConePoint lcb = boost_light_cone(lc, a);
    worst = std::max(worst, std::abs(lcb.u * lcb.v - lc.u * lc.v) / std::max(1.0, std::abs(lc.u * lc.v)));
  }
  c.pass = worst <= 1e-10;
  c.detail = "max deviation = " + fmt3(worst) + " (tol 1e-10)";
  return c;
}

inline std::string read_file_bytes(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline Criterion criterion_cli_determinism() {
  namespace fs = std::filesystem;
  Criterion c;
  c.label = "documented CLI example commands are byte-identical across repeated runs";
  const fs::path dir =
      fs::temp_directory_path() / ("covosc-verify-" + std::to_string(::getpid()));
  fs::create_directories(dir);

  // keep in sync with the README walkthrough
  std::vector<RunConfig> examples(7);
  examples[0].command = Command::wavefunction;
  examples[0].n = 1;
  examples[0].eta = 1.0;
  examples[0].grid_count = 101;
  examples[1].command = Command::momentum;
  examples[1].n = 1;
  examples[1].eta = 0.5;
  examples[1].grid_count = 61;
  examples[1].format = OutputFormat::json;
  examples[2].command = Command::moments;
  examples[2].n = 0;
  examples[2].eta = 0.0;
  examples[2].mode = MomentMode::analytic;
  examples[3].command = Command::moments;
  examples[3].n = 0;
  examples[3].eta = 1.0;
  examples[3].mode = MomentMode::quadrature;
  examples[3].format = OutputFormat::json;
  examples[4].command = Command::density;
  examples[4].n = 0;
  examples[4].eta = 1.0;
  examples[4].space = DensitySpace::momentum;
  examples[5].command = Command::density;
  examples[5].n = 2;
  examples[5].eta = 0.5;
  examples[5].space = DensitySpace::position;
  examples[6].command = Command::coherence;
  examples[6].energy_gev = 900.0;
  examples[6].format = OutputFormat::json;

  int mismatches = 0;
  int failures = 0;
  for (std::size_t i = 0; i < examples.size(); ++i) {
    RunConfig cfg = examples[i];
    const char* ext = (cfg.format == OutputFormat::csv) ? ".csv" : ".json";
    const std::string first = (dir / ("example" + std::to_string(i) + "a" + ext)).string();
    const std::string second = (dir / ("example" + std::to_string(i) + "b" + ext)).string();
    cfg.output_path = first;
    if (run_data_command(cfg) != 0) ++failures;
    cfg.output_path = second;
    if (run_data_command(cfg) != 0) ++failures;
    if (read_file_bytes(first) != read_file_bytes(second)) ++mismatches;
  }
  std::error_code ec;
  fs::remove_all(dir, ec);

  c.pass = failures == 0 && mismatches == 0;
  c.detail = std::to_string(examples.size()) + " commands, " + std::to_string(failures) +
             " failed runs, " + std::to_string(mismatches) + " byte mismatches";
  return c;
}

template <class Fn>
Criterion guarded(const std::string& label, Fn&& fn) {
  try {
    return fn();
  } catch (const std::exception& e) {
    Criterion c;
    c.pass = false;
    c.label = label;
    c.detail = std::string("exception: ") + e.what();
    return c;
  }
}

}  // namespace detail

// prints one line per criterion; returns 0 if all pass, else 2
inline int run_verification(std::ostream& out, int threads = 1) {
  using detail::Criterion;
  std::vector<Criterion> results;
  std::string convention_info;

  out << "covosc verification\n";

  {
    std::vector<MomentReport> reports;
    try {
      reports = detail::quadrature_reports(threads);
    } catch (const std::exception& e) {
      Criterion failed;
      failed.pass = false;
      failed.detail = std::string("exception: ") + e.what();
      failed.label = "uncertainty product <z^2><q_z^2> follows cosh^2(2 eta)/4";
      results.push_back(failed);
      failed.label = "light-cone uncertainty products stay at 1/4";
      results.push_back(failed);
    }
    if (!reports.empty()) {
      results.push_back(detail::criterion_product_zq(reports));
      results.push_back(detail::criterion_product_lightcone(reports));
    }
  }
  results.push_back(detail::guarded("boost preserves wave-function norm",
                                    [&] { return detail::criterion_norm(threads); }));
  results.push_back(detail::guarded("numeric transform matches the closed form", [&] {
    return detail::criterion_fourier(threads, convention_info);
  }));
  results.push_back(detail::guarded("oscillator-equation eigenvalue stays at n",
                                    [&] { return detail::criterion_eigenvalue(threads); }));
  results.push_back(
      detail::guarded("coherence ratio at 900 GeV", [] { return detail::criterion_coherence(); }));
  results.push_back(detail::guarded("marginal variances grow as cosh(2 eta)/2",
                                    [&] { return detail::criterion_marginals(threads); }));
  results.push_back(
      detail::guarded("kinematics invariants", [] { return detail::criterion_kinematics(); }));
  results.push_back(detail::guarded("CLI determinism",
                                    [] { return detail::criterion_cli_determinism(); }));

  int passed = 0;
  for (std::size_t i = 0; i < results.size(); ++i) {
    const Criterion& c = results[i];
    out << '[' << (i + 1) << '/' << results.size() << "] " << (c.pass ? "PASS" : "FAIL") << "  "
        << c.label << "; " << c.detail << '\n';
    if (i == 3 && !convention_info.empty()) out << convention_info << '\n';
    if (c.pass) ++passed;
  }
  out << "result: " << passed << '/' << results.size() << " criteria passed\n";
  return passed == static_cast<int>(results.size()) ? 0 : 2;
}

// single entry point behind the binary: data commands exit 0/1, verify 0/1/2
inline int run(const RunConfig& config) {
  if (config.command != Command::verify) return run_data_command(config);
  try {
    detail::require_threads(config.threads);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return run_verification(std::cout, config.threads);
}

}  // namespace covosc
