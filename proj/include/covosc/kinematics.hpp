#pragma once

// Boost algebra in the longitudinal (z, t) plane: light-cone maps, squeeze
// transformations, rapidity from beam energy, two-body relative variables.
// Everything here is analytic and accepts any finite rapidity; the quadrature
// bound ETA_MAX only applies to grid-backed operations in the other headers.

#include <array>
#include <cmath>
#include <string>
#include <utility>

#include "covosc/errors.hpp"

namespace covosc {

inline constexpr double ETA_MAX = 10.0;  // bound for quadrature-backed operations
inline constexpr int N_MAX = 24;         // highest excitation resolvable on default grids
inline constexpr double SQRT1_2 = 0.70710678118654752440;

// boost parameter, tanh(eta) = v/c; boosts compose by adding rapidities
struct Rapidity {
  double eta = 0.0;
};

struct SpacetimePoint {
  double z = 0.0;
  double t = 0.0;
};

// u = (z + t)/sqrt2, v = (z - t)/sqrt2; a boost scales u by e^eta and v by e^-eta
struct LightConePoint {
  double u = 0.0;
  double v = 0.0;
};

// component order (t, x, y, z), metric (+,-,-,-)
struct FourVector {
  double t_component = 0.0;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

using Mat2 = std::array<std::array<double, 2>, 2>;

inline void require_finite(double value, const char* name) {
  if (!std::isfinite(value)) {
    throw invalid_parameter(std::string(name) + " must be finite");
  }
}

// [[cosh eta, sinh eta], [sinh eta, cosh eta]] acting on (z, t); det = 1
inline Mat2 boost_matrix(Rapidity eta) {
  require_finite(eta.eta, "eta");
  const double ch = std::cosh(eta.eta);
  const double sh = std::sinh(eta.eta);
  return Mat2{{{ch, sh}, {sh, ch}}};
}

inline LightConePoint to_light_cone(SpacetimePoint p) {
  return {(p.z + p.t) * SQRT1_2, (p.z - p.t) * SQRT1_2};
}

inline SpacetimePoint from_light_cone(LightConePoint p) {
  return {(p.u + p.v) * SQRT1_2, (p.u - p.v) * SQRT1_2};
}

inline LightConePoint boost_light_cone(LightConePoint p, Rapidity eta) {
  return {std::exp(eta.eta) * p.u, std::exp(-eta.eta) * p.v};
}

inline SpacetimePoint boost_spacetime(SpacetimePoint p, Rapidity eta) {
  const double ch = std::cosh(eta.eta);
  const double sh = std::sinh(eta.eta);
  return {p.z * ch + p.t * sh, p.z * sh + p.t * ch};
}

// cosh(eta) = energy/mass, written as log1p(eps + sqrt(eps(2 + eps))) with
// eps = (E - m)/m so small boosts do not cancel catastrophically
inline Rapidity rapidity_from_energy(double energy_gev, double mass_gev) {
  if (!std::isfinite(mass_gev) || mass_gev <= 0.0) {
    throw invalid_parameter("mass_gev must be positive and finite");
  }
  if (!std::isfinite(energy_gev) || energy_gev < mass_gev) {
    throw invalid_parameter("energy_gev must be finite and >= mass_gev");
  }
  const double eps = (energy_gev - mass_gev) / mass_gev;
  return Rapidity{std::log1p(eps + std::sqrt(eps * (2.0 + eps)))};
}

// center X = (xa + xb)/2 and relative x = (xa - xb)/(2 sqrt2)
inline std::pair<FourVector, FourVector> relative_coordinates(const FourVector& xa,
                                                              const FourVector& xb) {
  const double k = 0.5 * SQRT1_2;  // 1/(2 sqrt2)
  FourVector center{0.5 * (xa.t_component + xb.t_component), 0.5 * (xa.x + xb.x),
                    0.5 * (xa.y + xb.y), 0.5 * (xa.z + xb.z)};
  FourVector rel{k * (xa.t_component - xb.t_component), k * (xa.x - xb.x), k * (xa.y - xb.y),
                 k * (xa.z - xb.z)};
  return {center, rel};
}

// total P = pa + pb and relative q = sqrt2 (pa - pb)
inline std::pair<FourVector, FourVector> relative_momenta(const FourVector& pa,
                                                          const FourVector& pb) {
  const double k = 2.0 * SQRT1_2;  // sqrt2
  FourVector total{pa.t_component + pb.t_component, pa.x + pb.x, pa.y + pb.y, pa.z + pb.z};
  FourVector rel{k * (pa.t_component - pb.t_component), k * (pa.x - pb.x), k * (pa.y - pb.y),
                 k * (pa.z - pb.z)};
  return {total, rel};
}

}  // namespace covosc
