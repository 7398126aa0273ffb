#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "covosc/momentum.hpp"

using namespace covosc;

namespace {

// separable closed form for any level: the transform boosts the momenta the
// same way the squeeze boosts the coordinates
double momentum_closed_form(const OscillatorState& s, MomentumPoint q) {
  const double ch = std::cosh(s.eta.eta);
  const double sh = std::sinh(s.eta.eta);
  const double qz_rest = q.q_z * ch - q.q_0 * sh;
  const double q0_rest = q.q_0 * ch - q.q_z * sh;
  return norm_constant(s.n) * hermite_gaussian(s.n, qz_rest) * std::exp(-0.5 * q0_rest * q0_rest);
}

}  // namespace

TEST_CASE("light-cone momenta from longitudinal momentum and energy") {
  const LightConeMomentum origin = to_light_cone_momentum({0.0, 0.0});
  CHECK(origin.q_u == 0.0);
  CHECK(origin.q_v == 0.0);
  const LightConeMomentum diag = to_light_cone_momentum({1.0, 1.0});
  CHECK(diag.q_u == Catch::Approx(0.0).margin(1e-15));
  CHECK(diag.q_v == Catch::Approx(std::sqrt(2.0)).epsilon(1e-15));
  const LightConeMomentum anti = to_light_cone_momentum({-1.0, 1.0});
  CHECK(anti.q_u == Catch::Approx(std::sqrt(2.0)).epsilon(1e-15));
  CHECK(anti.q_v == Catch::Approx(0.0).margin(1e-15));
}

TEST_CASE("ground momentum wave function at reference points") {
  CHECK(momentum_wavefunction_ground(Rapidity{0.0}, {0.0, 0.0}).value ==
        Catch::Approx(0.56418958354775629).epsilon(1e-15));
  // the exponent vanishes at the origin for every boost
  for (const double eta : {-2.0, 0.5, 7.0}) {
    CHECK(momentum_wavefunction_ground(Rapidity{eta}, {0.0, 0.0}).value ==
          Catch::Approx(0.56418958354775629).epsilon(1e-15));
  }
  CHECK(momentum_wavefunction_ground(Rapidity{0.0}, {0.3, -0.2}).value ==
        Catch::Approx(0.52868370191904961).epsilon(1e-14));
  CHECK(momentum_wavefunction_ground(Rapidity{1.0}, {-1.0, 1.0}).value ==
        Catch::Approx(3.4865730863197297e-04).epsilon(1e-13));
}

TEST_CASE("ground momentum density is widest along the contracted light-cone axis") {
  // at eta > 0 the q_u direction is compressed by e^{2 eta} in the exponent
  const Rapidity eta{1.0};
  const double along_u = momentum_wavefunction_ground(eta, {-0.5, 0.5}).value;  // q_v = 0
  const double along_v = momentum_wavefunction_ground(eta, {0.5, 0.5}).value;   // q_u = 0
  CHECK(along_u < along_v);
}

TEST_CASE("numeric transform reproduces the round rest Gaussian") {
  const Grid1D axis{-6.0, 6.0, 25};
  const FourierResult fr = fourier_numeric_detailed({0, Rapidity{0.0}}, Grid2D{axis, axis});
  CHECK(fr.max_abs_imag <= 1e-8);
  for (int k = 0; k < axis.count; ++k) {
    for (int l = 0; l < axis.count; ++l) {
      const double closed =
          momentum_wavefunction_ground(Rapidity{0.0}, {axis.node(k), axis.node(l)}).value;
      CHECK(fr.field.value_at(k, l) == Catch::Approx(closed).margin(1e-6));
    }
  }
}

TEST_CASE("numeric transform reproduces the boosted ground closed form") {
  const double eta = 0.5;
  const double stretch = std::exp(eta);
  const Grid1D axis = symmetric_axis(6.0 * stretch, 0.6 / stretch);
  const FourierResult fr = fourier_numeric_detailed({0, Rapidity{eta}}, Grid2D{axis, axis});
  CHECK(fr.max_abs_imag <= 1e-8);
  double worst = 0.0;
  for (int k = 0; k < axis.count; ++k) {
    for (int l = 0; l < axis.count; ++l) {
      const double closed =
          momentum_wavefunction_ground(Rapidity{eta}, {axis.node(k), axis.node(l)}).value;
      worst = std::max(worst, std::abs(fr.field.value_at(k, l) - closed));
    }
  }
  CHECK(worst <= 1e-6);
}

TEST_CASE("first excited transform vanishes at zero momentum and matches the separable form") {
  const Grid1D axis{-6.0, 6.0, 25};
  const SampledField field = fourier_numeric({1, Rapidity{0.0}}, Grid2D{axis, axis});
  const int mid = (axis.count - 1) / 2;  // q_z = 0 column
  for (int l = 0; l < axis.count; ++l) {
    CHECK(std::abs(field.value_at(mid, l)) <= 1e-6);
  }
  for (int k = 0; k < axis.count; ++k) {
    for (int l = 0; l < axis.count; ++l) {
      const double closed =
          momentum_closed_form({1, Rapidity{0.0}}, {axis.node(k), axis.node(l)});
      CHECK(field.value_at(k, l) == Catch::Approx(closed).margin(1e-6));
    }
  }
}

TEST_CASE("boosted excited transform matches the separable form") {
  const OscillatorState s{2, Rapidity{0.5}};
  const Grid1D axis{-6.0, 6.0, 61};
  const SampledField field = fourier_numeric(s, Grid2D{axis, axis});
  double worst = 0.0;
  for (int k = 0; k < axis.count; ++k) {
    for (int l = 0; l < axis.count; ++l) {
      worst = std::max(worst, std::abs(field.value_at(k, l) -
                                       momentum_closed_form(s, {axis.node(k), axis.node(l)})));
    }
  }
  CHECK(worst <= 1e-6);
  // node (1.0, 0.4) against a high-precision hand evaluation
  CHECK(field.value_at(35, 32) == Catch::Approx(0.17993130077879773).epsilon(1e-10));
}

TEST_CASE("transform conserves probability") {
  for (int n : {0, 1, 2}) {
    for (const double eta : {0.0, 1.0}) {
      const double stretch = std::exp(eta);
      const Grid1D axis = symmetric_axis((6.0 + 2.0 * std::sqrt(static_cast<double>(n))) * stretch,
                                         0.5 / stretch);
      const Grid2D grid{axis, axis};
      const SampledField field = fourier_numeric({n, Rapidity{eta}}, grid);
      double total = 0.0;
      for (int k = 0; k < axis.count; ++k) {
        double row = 0.0;
        for (int l = 0; l < axis.count; ++l) {
          const double v = field.value_at(k, l);
          row += axis.weight(l) * v * v;
        }
        total += axis.weight(k) * row;
      }
      CHECK(total == Catch::Approx(1.0).margin(1e-5));
    }
  }
}

TEST_CASE("transforming twice with the conjugate kernel restores the wave function") {
  const Grid1D q_axis{-8.0, 8.0, 129};
  const SampledField phi = fourier_numeric({0, Rapidity{0.0}}, Grid2D{q_axis, q_axis});
  const SpacetimePoint probes[] = {{0.0, 0.0}, {0.5, -0.3}, {1.2, 0.7}};
  for (const SpacetimePoint p : probes) {
    double rec = 0.0;
    for (int k = 0; k < q_axis.count; ++k) {
      const double qz = q_axis.node(k);
      double row = 0.0;
      for (int l = 0; l < q_axis.count; ++l) {
        const double q0 = q_axis.node(l);
        row += q_axis.weight(l) * phi.value_at(k, l) * std::cos(qz * p.z - q0 * p.t);
      }
      rec += q_axis.weight(k) * row;
    }
    rec /= 2.0 * std::numbers::pi;
    CHECK(rec == Catch::Approx(boosted_wavefunction({0, Rapidity{0.0}}, p).value).margin(1e-5));
  }
}

TEST_CASE("transform is identical for any thread count") {
  const Grid1D axis{-5.0, 5.0, 21};
  const Grid2D grid{axis, axis};
  const SampledField one = fourier_numeric({1, Rapidity{0.5}}, grid, 1);
  const SampledField four = fourier_numeric({1, Rapidity{0.5}}, grid, 4);
  REQUIRE(one.values.size() == four.values.size());
  for (std::size_t i = 0; i < one.values.size(); ++i) CHECK(one.values[i] == four.values[i]);
}

TEST_CASE("momentum operations reject unusable input") {
  CHECK_THROWS_AS(momentum_wavefunction_ground(Rapidity{0.0}, {std::nan(""), 0.0}),
                  invalid_parameter);
  const Grid1D axis{-5.0, 5.0, 21};
  CHECK_THROWS_AS(fourier_numeric({N_MAX + 1, Rapidity{0.0}}, Grid2D{axis, axis}),
                  invalid_parameter);
  CHECK_THROWS_AS(fourier_numeric({0, Rapidity{11.0}}, Grid2D{axis, axis}), invalid_parameter);
  const Grid1D even{-5.0, 5.0, 20};
  CHECK_THROWS_AS(fourier_numeric({0, Rapidity{0.0}}, Grid2D{even, axis}), invalid_parameter);
}
