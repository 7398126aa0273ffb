#pragma once

// Hermite machinery and the rest/boosted longitudinal oscillator wave
// functions, plus a finite-difference residual check of the Lorentz-invariant
// oscillator operator (1/2)(z^2 - t^2 - d2/dz2 + d2/dt2).
//
// A boost acts on the wave function as a light-cone squeeze: with
// u = (z + t)/sqrt2, v = (z - t)/sqrt2,
//   psi^n_eta(z, t) = N_n H_n((e^-eta u + e^eta v)/sqrt2)
//                         exp(-(e^-2eta u^2 + e^2eta v^2)/2),
// which equals the rest wave function at the inverse-boosted point. The two
// quadratic pieces are kept paired through hermite_gaussian so large grids at
// large rapidity never form H_n and the Gaussian separately (overflow pairing
// an underflow).

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "covosc/errors.hpp"
#include "covosc/kinematics.hpp"
#include "covosc/numerics.hpp"

namespace covosc {

// excitation n and rapidity eta identify one wave function psi^n_eta
struct OscillatorState {
  int n = 0;
  Rapidity eta{};
};

// wave-function value; everything in scope is real in position space
struct Amplitude {
  double value = 0.0;
};

inline void validate_state(const OscillatorState& s) {
  if (s.n < 0 || s.n > N_MAX) {
    throw invalid_parameter("excitation n must lie in [0, " + std::to_string(N_MAX) + "]");
  }
  require_finite(s.eta.eta, "eta");
}

// physicists' Hermite polynomial, H_{k+1} = 2x H_k - 2k H_{k-1}
inline double hermite(int n, double x) {
  if (n < 0 || n > N_MAX) {
    throw invalid_parameter("hermite order must lie in [0, " + std::to_string(N_MAX) + "]");
  }
  double hk = 1.0;
  double hkm1 = 0.0;
  for (int k = 0; k < n; ++k) {
    const double hkp1 = 2.0 * x * hk - 2.0 * static_cast<double>(k) * hkm1;
    hkm1 = hk;
    hk = hkp1;
  }
  return hk;
}

// H_n(x) e^{-x^2/2}; beyond |x| = 15 the damped product is carried through the
// recurrence so the polynomial factor can never overflow on squeezed grids
inline double hermite_gaussian(int n, double x) {
  if (n < 0 || n > N_MAX) {
    throw invalid_parameter("hermite order must lie in [0, " + std::to_string(N_MAX) + "]");
  }
  const double damp = std::exp(-0.5 * x * x);
  if (std::abs(x) <= 15.0) return hermite(n, x) * damp;
  double hk = damp;
  double hkm1 = 0.0;
  for (int k = 0; k < n; ++k) {
    const double hkp1 = 2.0 * x * hk - 2.0 * static_cast<double>(k) * hkm1;
    hkm1 = hk;
    hk = hkp1;
  }
  return hk;
}

// (pi n! 2^n)^{-1/2}: exact unit norm over the (z, t) plane
inline double norm_constant(int n) {
  if (n < 0 || n > N_MAX) {
    throw invalid_parameter("excitation n must lie in [0, " + std::to_string(N_MAX) + "]");
  }
  double factorial = 1.0;
  for (int k = 2; k <= n; ++k) factorial *= static_cast<double>(k);
  return 1.0 / std::sqrt(std::numbers::pi * factorial * std::ldexp(1.0, n));
}

// psi^n_0(z, t) = N_n H_n(z) exp(-(z^2 + t^2)/2)
inline Amplitude rest_wavefunction(int n, SpacetimePoint p) {
  if (n < 0 || n > N_MAX) {
    throw invalid_parameter("excitation n must lie in [0, " + std::to_string(N_MAX) + "]");
  }
  return {norm_constant(n) * hermite_gaussian(n, p.z) * std::exp(-0.5 * p.t * p.t)};
}

inline Amplitude boosted_wavefunction(const OscillatorState& s, SpacetimePoint p) {
  validate_state(s);
  const LightConePoint lc = to_light_cone(p);
  // zero-guard: e^{±eta} can overflow for extreme eta, but 0 * inf must stay 0
  const double a = (lc.u == 0.0) ? 0.0 : std::exp(-s.eta.eta) * lc.u;
  const double b = (lc.v == 0.0) ? 0.0 : std::exp(s.eta.eta) * lc.v;
  const double arg = (a + b) * SQRT1_2;    // = z cosh(eta) - t sinh(eta)
  const double targ = (a - b) * SQRT1_2;   // = t cosh(eta) - z sinh(eta)
  return {norm_constant(s.n) * hermite_gaussian(s.n, arg) * std::exp(-0.5 * targ * targ)};
}

// envelope cut for support windows: exp(-(arg^2 + targ^2)/2) below e^{-170} of
// peak is negligible against every stated tolerance even at n = N_MAX
inline constexpr double SUPPORT_R2 = 340.0;

// t-axis node range where arg^2 + targ^2 = cosh(2 eta)(z^2 + t^2) - 2 sinh(2 eta) z t
// stays below r2_max for the given z; the same quadratic form governs the
// momentum-space envelope with (q_z, q_0) in place of (z, t)
inline IndexWindow squeeze_window(Rapidity eta, const Grid1D& axis_t, double z,
                                  double r2_max = SUPPORT_R2) {
  const double c2 = std::cosh(2.0 * eta.eta);
  const double s2 = std::sinh(2.0 * eta.eta);
  if (!std::isfinite(c2)) return IndexWindow{0, axis_t.count - 1};  // degenerate, keep it safe
  const double disc = c2 * r2_max - z * z;
  if (disc <= 0.0) return IndexWindow{};  // whole row negligible
  const double half = std::sqrt(disc) / c2;
  const double center = (s2 / c2) * z;
  const double h = axis_t.spacing();
  int first = static_cast<int>(std::floor((center - half - axis_t.min) / h)) - 2;
  int last = static_cast<int>(std::ceil((center + half - axis_t.min) / h)) + 2;
  first = std::max(first, 0);
  last = std::min(last, axis_t.count - 1);
  return IndexWindow{first, last};
}

// least-squares fit H psi ~ lambda psi over interior nodes with |psi| above
// 1e-6 of peak; returns (lambda, relative residual 2-norm over those nodes)
inline std::pair<double, double> oscillator_residual(const OscillatorState& s,
                                                     const Grid2D& grid, int threads = 1) {
  validate_state(s);
  validate_grid(grid);
  if (std::abs(s.eta.eta) > ETA_MAX) {
    throw invalid_parameter("quadrature requires |eta| <= " + std::to_string(ETA_MAX));
  }
  const double h_needed = 0.05 * std::exp(-std::abs(s.eta.eta));
  if (grid.axis_z.spacing() > h_needed * (1.0 + 1e-9) ||
      grid.axis_t.spacing() > h_needed * (1.0 + 1e-9)) {
    throw invalid_parameter("grid too coarse for eta, need spacing <= " +
                            std::to_string(h_needed));
  }

  const SampledField psi = sample_field(
      grid, [&](double z, double t) { return boosted_wavefunction(s, {z, t}).value; }, threads);

  double peak = 0.0;
  for (const double v : psi.values) peak = std::max(peak, std::abs(v));
  const double threshold = 1e-6 * peak;

  const Grid1D& az = grid.axis_z;
  const Grid1D& at = grid.axis_t;
  const double hz2 = az.spacing() * az.spacing();
  const double ht2 = at.spacing() * at.spacing();

  // pass 1: lambda = sum(H psi * psi) / sum(psi^2) over accepted nodes
  std::vector<double> hpsi(psi.values.size(), 0.0);
  double num = 0.0;
  double den = 0.0;
  for (int i = 1; i < az.count - 1; ++i) {
    const double z = az.node(i);
    for (int j = 1; j < at.count - 1; ++j) {
      const double p = psi.value_at(i, j);
      if (std::abs(p) <= threshold) continue;
      const double d2z = (psi.value_at(i + 1, j) - 2.0 * p + psi.value_at(i - 1, j)) / hz2;
      const double d2t = (psi.value_at(i, j + 1) - 2.0 * p + psi.value_at(i, j - 1)) / ht2;
      const double t = at.node(j);
      const double hp = 0.5 * ((z * z - t * t) * p - d2z + d2t);
      hpsi[static_cast<std::size_t>(i) * at.count + j] = hp;
      num += hp * p;
      den += p * p;
    }
  }
  if (den == 0.0) throw invalid_parameter("wave function vanishes on the given grid");
  const double lambda = num / den;

  // pass 2: residual against the fitted eigenvalue
  double sq = 0.0;
  for (int i = 1; i < az.count - 1; ++i) {
    for (int j = 1; j < at.count - 1; ++j) {
      const double p = psi.value_at(i, j);
      if (std::abs(p) <= threshold) continue;
      const double r = hpsi[static_cast<std::size_t>(i) * at.count + j] - lambda * p;
      sq += r * r;
    }
  }
  return {lambda, std::sqrt(sq / den)};
}

}  // namespace covosc
