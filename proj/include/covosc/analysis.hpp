#pragma once

// Quantitative consequences of the squeeze: second moments and uncertainty
// products, longitudinal marginal densities in both spaces, and the
// interaction-time to oscillation-period ratio for a boosted bound state.

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "covosc/errors.hpp"
#include "covosc/kinematics.hpp"
#include "covosc/momentum.hpp"
#include "covosc/numerics.hpp"
#include "covosc/oscillator.hpp"

namespace covosc {

enum class MomentMode { analytic, quadrature };

struct MomentReport {
  double eta = 0.0;
  int n = 0;
  double z2 = 0.0;   // <z^2>
  double qz2 = 0.0;  // <q_z^2>
  double u2 = 0.0;
  double v2 = 0.0;
  double qu2 = 0.0;
  double qv2 = 0.0;
  double product_zq = 0.0;   // z2 * qz2, grows as cosh^2(2 eta)/4
  double product_uqu = 0.0;  // u2 * qu2, boost-invariant 1/4
  double product_vqv = 0.0;  // v2 * qv2, boost-invariant 1/4
};

struct CoherenceReport {
  double energy_gev = 0.0;
  double mass_gev = 0.0;
  double eta = 0.0;
  double period_dilation = 0.0;         // e^eta
  double interaction_contraction = 0.0;  // e^-eta
  double ratio = 0.0;                    // e^-2eta
};

// marginal probability density on a 1D axis, renormalized to unit integral
struct DensityProfile {
  Grid1D axis;
  std::vector<double> values;
};

inline double profile_norm(const DensityProfile& p) { return integrate_1d(p.axis, p.values); }

// second moment about the origin; the mean vanishes by symmetry
inline double profile_variance(const DensityProfile& p) {
  validate_grid(p.axis);
  if (p.values.size() != static_cast<std::size_t>(p.axis.count)) {
    throw invalid_parameter("profile size does not match axis count");
  }
  double total = 0.0;
  for (int i = 0; i < p.axis.count; ++i) {
    const double x = p.axis.node(i);
    total += p.axis.weight(i) * x * x * p.values[static_cast<std::size_t>(i)];
  }
  return total;
}

namespace detail {

// |psi_eta|^2 on the default grid, zeros outside the support window
inline SampledField position_density_field(const OscillatorState& s, int threads) {
  const Grid2D g = default_grid(s.eta, s.n);
  return sample_field_windowed(
      g,
      [&s](double z, double t) {
        const double a = boosted_wavefunction(s, {z, t}).value;
        return a * a;
      },
      [&s, &g](int i) { return squeeze_window(s.eta, g.axis_t, g.axis_z.node(i)); }, threads);
}

// |phi_eta|^2 for the ground state; the envelope obeys the same quadratic
// form as position space, so the same window applies with (q_z, q_0) axes
inline SampledField momentum_density_field_ground(Rapidity eta, int threads) {
  const Grid2D g = default_grid(eta, 0);
  return sample_field_windowed(
      g,
      [eta](double qz, double q0) {
        const double a = momentum_wavefunction_ground(eta, {qz, q0}).value;
        return a * a;
      },
      [eta, &g](int i) { return squeeze_window(eta, g.axis_t, g.axis_z.node(i)); }, threads);
}

// |phi|^2 for excited states via the numeric transform on a coarser grid
// (spacing 0.15 e^-|eta| resolves the position support of (6 + 2 sqrt n) e^|eta|
// with a 2x Nyquist margin)
inline SampledField momentum_density_field_excited(const OscillatorState& s, int threads) {
  const double stretch = std::exp(std::abs(s.eta.eta));
  const Grid1D axis =
      symmetric_axis((6.0 + 2.0 * std::sqrt(static_cast<double>(s.n))) * stretch, 0.15 / stretch);
  SampledField phi = fourier_numeric(s, Grid2D{axis, axis}, threads);
  for (double& v : phi.values) v = v * v;
  return phi;
}

}  // namespace detail

inline MomentReport uncertainty_products(int n, Rapidity eta, MomentMode mode, int threads = 1) {
  if (n < 0 || n > N_MAX) {
    throw invalid_parameter("n must lie in [0, " + std::to_string(N_MAX) + "]");
  }
  require_finite(eta.eta, "eta");
  MomentReport r;
  r.eta = eta.eta;
  r.n = n;
  if (mode == MomentMode::analytic) {
    if (n != 0) {
      throw unsupported_mode("analytic moments cover the ground state only; use quadrature");
    }
    r.z2 = 0.5 * std::cosh(2.0 * eta.eta);
    r.qz2 = r.z2;
    r.u2 = 0.5 * std::exp(2.0 * eta.eta);
    r.v2 = 0.5 * std::exp(-2.0 * eta.eta);
    r.qu2 = 0.5 * std::exp(-2.0 * eta.eta);
    r.qv2 = 0.5 * std::exp(2.0 * eta.eta);
  } else {
    if (std::abs(eta.eta) > ETA_MAX) {
      throw invalid_parameter("quadrature requires |eta| <= " + std::to_string(ETA_MAX));
    }
    const OscillatorState state{n, eta};
    const double s = SQRT1_2;
    {
      const SampledField rho = detail::position_density_field(state, threads);
      r.z2 = second_moment(rho, {1.0, 0.0});
      r.u2 = second_moment(rho, {s, s});    // u = (z + t)/sqrt2
      r.v2 = second_moment(rho, {s, -s});   // v = (z - t)/sqrt2
    }
    const SampledField sigma = (n == 0)
                                   ? detail::momentum_density_field_ground(eta, threads)
                                   : detail::momentum_density_field_excited(state, threads);
    r.qz2 = second_moment(sigma, {1.0, 0.0});
    r.qu2 = second_moment(sigma, {-s, s});  // q_u = (q_0 - q_z)/sqrt2
    r.qv2 = second_moment(sigma, {s, s});   // q_v = (q_0 + q_z)/sqrt2
  }
  r.product_zq = r.z2 * r.qz2;
  r.product_uqu = r.u2 * r.qu2;
  r.product_vqv = r.v2 * r.qv2;
  return r;
}

namespace detail {

// integrate rows of a squeezed density given by `density(x_slow, x_fast)`,
// then renormalize to exact unit integral; raw norm must already be 1 ± 1e-5
template <class Density>
DensityProfile marginal_profile(Rapidity eta, const Grid2D& grid, Density&& density,
                                int threads) {
  const Grid1D axis = grid.axis_z;
  const Grid1D& fast = grid.axis_t;
  std::vector<double> values(static_cast<std::size_t>(axis.count), 0.0);
  parallel_for(axis.count, threads, [&](int i) {
    const IndexWindow win = squeeze_window(eta, fast, axis.node(i));
    if (win.empty()) return;
    const double x = axis.node(i);
    double row = 0.0;
    for (int j = win.first; j <= win.last; ++j) row += fast.weight(j) * density(x, fast.node(j));
    values[static_cast<std::size_t>(i)] = row;
  });
  DensityProfile profile{axis, std::move(values)};
  const double raw = profile_norm(profile);
  if (std::abs(raw - 1.0) > 1e-5) {
    throw precondition_error("marginal density integrates to " + std::to_string(raw) +
                             ", expected 1 within 1e-5");
  }
  for (double& v : profile.values) v /= raw;
  return profile;
}

}  // namespace detail

// rho_eta(z) = integral over t of |psi^n_eta|^2
inline DensityProfile longitudinal_position_density(int n, Rapidity eta, int threads = 1) {
  const OscillatorState state{n, eta};  // validates n
  validate_state(state);
  const Grid2D g = default_grid(eta, n);
  return detail::marginal_profile(
      eta, g,
      [&state](double z, double t) {
        const double a = boosted_wavefunction(state, {z, t}).value;
        return a * a;
      },
      threads);
}

// sigma_eta(q_z) = integral over q_0 of |phi_eta|^2; closed form feeds n = 0,
// the numeric transform feeds n in {1, 2}
inline DensityProfile longitudinal_momentum_density(int n, Rapidity eta, int threads = 1) {
  if (n < 0 || n > 2) {
    throw invalid_parameter("momentum density supports n in {0, 1, 2}");
  }
  require_finite(eta.eta, "eta");
  if (std::abs(eta.eta) > ETA_MAX) {
    throw invalid_parameter("quadrature requires |eta| <= " + std::to_string(ETA_MAX));
  }
  if (n == 0) {
    const Grid2D g = default_grid(eta, 0);
    return detail::marginal_profile(
        eta, g,
        [eta](double qz, double q0) {
          const double a = momentum_wavefunction_ground(eta, {qz, q0}).value;
          return a * a;
        },
        threads);
  }
  const SampledField sq = detail::momentum_density_field_excited({n, eta}, threads);
  const Grid1D axis = sq.grid.axis_z;
  const Grid1D& fast = sq.grid.axis_t;
  std::vector<double> values(static_cast<std::size_t>(axis.count), 0.0);
  for (int i = 0; i < axis.count; ++i) {
    double row = 0.0;
    for (int j = 0; j < fast.count; ++j) row += fast.weight(j) * sq.value_at(i, j);
    values[static_cast<std::size_t>(i)] = row;
  }
  DensityProfile profile{axis, std::move(values)};
  const double raw = profile_norm(profile);
  if (std::abs(raw - 1.0) > 1e-5) {
    throw precondition_error("marginal density integrates to " + std::to_string(raw) +
                             ", expected 1 within 1e-5");
  }
  for (double& v : profile.values) v /= raw;
  return profile;
}

// time dilation stretches the internal period by e^eta while the interaction
// time shrinks by e^-eta; their ratio e^-2eta is why constituents look frozen
inline CoherenceReport coherence_ratio(double energy_gev, double mass_gev) {
  const Rapidity eta = rapidity_from_energy(energy_gev, mass_gev);
  CoherenceReport r;
  r.energy_gev = energy_gev;
  r.mass_gev = mass_gev;
  r.eta = eta.eta;
  r.period_dilation = std::exp(eta.eta);
  r.interaction_contraction = std::exp(-eta.eta);
  r.ratio = std::exp(-2.0 * eta.eta);
  return r;
}

}  // namespace covosc
