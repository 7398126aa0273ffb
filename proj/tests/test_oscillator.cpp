#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "covosc/oscillator.hpp"

using namespace covosc;

TEST_CASE("hermite polynomials match hand values") {
  CHECK(hermite(0, 1.7) == 1.0);
  CHECK(hermite(1, 1.7) == Catch::Approx(3.4).epsilon(1e-15));
  CHECK(hermite(4, 1.0) == Catch::Approx(-20.0).epsilon(1e-14));
  std::mt19937_64 rng(5u);
  std::uniform_real_distribution<double> xs(-3.0, 3.0);
  for (int i = 0; i < 30; ++i) {
    const double x = xs(rng);
    CHECK(hermite(2, x) == Catch::Approx(4.0 * x * x - 2.0).margin(1e-12));
    CHECK(hermite(3, x) == Catch::Approx(8.0 * x * x * x - 12.0 * x).margin(1e-11));
  }
}

TEST_CASE("damped hermite stays finite where the bare polynomial overflows") {
  // at x = 40 the Gaussian dwarfs any polynomial growth
  for (int n = 0; n <= N_MAX; ++n) {
    const double v = hermite_gaussian(n, 40.0);
    CHECK(std::isfinite(v));
    CHECK(std::abs(v) < 1e-200);
  }
  // continuity across the scaled-recurrence switch at |x| = 15; the Gaussian
  // slope alone moves the value by ~3e-5 over this 2e-6 step
  for (int n : {0, 1, 5, 12, 24}) {
    const double below = hermite_gaussian(n, 14.999999);
    const double above = hermite_gaussian(n, 15.000001);
    CHECK(above == Catch::Approx(below).epsilon(1e-4));
    // scaled recurrence against the plain product just past the switch, where
    // H_n(15.5) is still far from overflow
    CHECK(hermite_gaussian(n, 15.5) ==
          Catch::Approx(hermite(n, 15.5) * std::exp(-0.5 * 15.5 * 15.5)).epsilon(1e-12));
  }
  // against the plain product where both are representable
  CHECK(hermite_gaussian(4, 2.0) ==
        Catch::Approx(hermite(4, 2.0) * std::exp(-2.0)).epsilon(1e-13));
}

TEST_CASE("normalization constants") {
  CHECK(norm_constant(0) == Catch::Approx(0.56418958354775629).epsilon(1e-15));
  CHECK(norm_constant(1) == Catch::Approx(0.39894228040143268).epsilon(1e-15));
  // ratio follows 1/sqrt(2(n+1))
  for (int n = 0; n < 10; ++n) {
    CHECK(norm_constant(n + 1) / norm_constant(n) ==
          Catch::Approx(1.0 / std::sqrt(2.0 * (n + 1))).epsilon(1e-13));
  }
}

TEST_CASE("rest wave function values") {
  CHECK(rest_wavefunction(0, {1.0, 1.0}).value ==
        Catch::Approx(0.20755374871029735).epsilon(1e-14));
  CHECK(rest_wavefunction(1, {1.0, 0.5}).value ==
        Catch::Approx(0.42707682980858884).epsilon(1e-14));
  // odd levels vanish on the t axis
  CHECK(rest_wavefunction(1, {0.0, 0.7}).value == 0.0);
}

TEST_CASE("boost acts as coordinate substitution") {
  std::mt19937_64 rng(31u);
  std::uniform_real_distribution<double> coord(-3.0, 3.0);
  std::uniform_real_distribution<double> rap(-2.0, 2.0);
  for (int n : {0, 1, 4}) {
    for (int i = 0; i < 20; ++i) {
      const SpacetimePoint p{coord(rng), coord(rng)};
      const Rapidity eta{rap(rng)};
      const double boosted = boosted_wavefunction({n, eta}, p).value;
      const SpacetimePoint rest_frame = boost_spacetime(p, Rapidity{-eta.eta});
      const double substituted = rest_wavefunction(n, rest_frame).value;
      CHECK(boosted == Catch::Approx(substituted).margin(1e-10));
    }
  }
}

TEST_CASE("boosted ground state at a reference point") {
  CHECK(boosted_wavefunction({0, Rapidity{1.0}}, {1.0, 1.0}).value ==
        Catch::Approx(0.49277616906465572).epsilon(1e-14));
}

TEST_CASE("zero boost reduces to the rest wave function") {
  for (int n : {0, 2, 7}) {
    for (double z : {-1.3, 0.0, 2.1}) {
      for (double t : {-0.4, 0.9}) {
        CHECK(boosted_wavefunction({n, Rapidity{0.0}}, {z, t}).value ==
              Catch::Approx(rest_wavefunction(n, {z, t}).value).margin(1e-14));
      }
    }
  }
}

TEST_CASE("time dependence stays Gaussian at every position") {
  // psi(z, t1)/psi(z, t2) = exp((t2^2 - t1^2)/2) at rest, for any level
  std::mt19937_64 rng(43u);
  std::uniform_real_distribution<double> coord(-2.0, 2.0);
  for (int n : {0, 1, 3}) {
    for (int i = 0; i < 20; ++i) {
      const double z = coord(rng);
      const double t1 = coord(rng), t2 = coord(rng);
      const double a1 = rest_wavefunction(n, {z, t1}).value;
      const double a2 = rest_wavefunction(n, {z, t2}).value;
      if (std::abs(a2) < 1e-12) continue;  // H_n zero crossing
      CHECK(a1 / a2 == Catch::Approx(std::exp(0.5 * (t2 * t2 - t1 * t1))).epsilon(1e-10));
    }
  }
}

TEST_CASE("boosted states stay normalized") {
  const OscillatorState s{3, Rapidity{0.5}};
  const Grid2D grid = default_grid(s.eta, s.n);
  const double norm = integrate_2d(grid, [&s](double z, double t) {
    const double a = boosted_wavefunction(s, {z, t}).value;
    return a * a;
  });
  CHECK(norm == Catch::Approx(1.0).margin(1e-7));
}

TEST_CASE("different levels stay orthogonal, boosted or not") {
  for (const double eta : {0.0, 1.0}) {
    const Grid2D grid = default_grid(Rapidity{eta}, 3);
    const double o02 = integrate_2d(grid, [eta](double z, double t) {
      return boosted_wavefunction({0, Rapidity{eta}}, {z, t}).value *
             boosted_wavefunction({2, Rapidity{eta}}, {z, t}).value;
    });
    const double o13 = integrate_2d(grid, [eta](double z, double t) {
      return boosted_wavefunction({1, Rapidity{eta}}, {z, t}).value *
             boosted_wavefunction({3, Rapidity{eta}}, {z, t}).value;
    });
    CHECK(std::abs(o02) < 1e-8);
    CHECK(std::abs(o13) < 1e-8);
  }
}

TEST_CASE("support window excludes only negligible amplitude") {
  const OscillatorState s{2, Rapidity{1.0}};
  const Grid2D grid = default_grid(s.eta, s.n);
  const Grid1D& at = grid.axis_t;
  for (const int i : {0, grid.axis_z.count / 4, grid.axis_z.count / 2, grid.axis_z.count - 1}) {
    const double z = grid.axis_z.node(i);
    const IndexWindow win = squeeze_window(s.eta, at, z);
    if (!win.empty()) {
      CHECK(win.first >= 0);
      CHECK(win.last < at.count);
    }
    for (int j = 0; j < at.count; j += 50) {
      if (j >= win.first && j <= win.last) continue;
      CHECK(std::abs(boosted_wavefunction(s, {z, at.node(j)}).value) < 1e-60);
    }
  }
  // at rest the window is the centered disc slice; a short axis is kept whole
  const Grid1D short_axis{-5.0, 5.0, 201};
  const IndexWindow center = squeeze_window(Rapidity{0.0}, short_axis, 0.0);
  CHECK(center.first == 0);
  CHECK(center.last == short_axis.count - 1);
  // far outside the disc the row is dropped entirely
  CHECK(squeeze_window(Rapidity{0.0}, short_axis, 40.0).empty());
}

TEST_CASE("differential operator reproduces the level index") {
  const auto [l0, r0] = oscillator_residual({0, Rapidity{0.0}}, default_grid(Rapidity{0.0}, 0));
  CHECK(l0 == Catch::Approx(0.0).margin(1e-3));
  CHECK(r0 < 1e-3);
  const auto [l1, r1] = oscillator_residual({1, Rapidity{0.0}}, default_grid(Rapidity{0.0}, 1));
  CHECK(l1 == Catch::Approx(1.0).margin(1e-3));
  CHECK(r1 < 1e-3);
  // truncation error scales with h^2; half the default spacing brings the
  // n = 2 state inside the same bounds
  const Grid1D fine = symmetric_axis(6.0 + 2.0 * std::sqrt(2.0), 0.025);
  const auto [l2, r2] = oscillator_residual({2, Rapidity{0.0}}, Grid2D{fine, fine});
  CHECK(l2 == Catch::Approx(2.0).margin(1e-3));
  CHECK(r2 < 1e-3);
}

TEST_CASE("oscillator rejects out-of-range states and coarse grids") {
  CHECK_THROWS_AS(hermite(-1, 0.0), invalid_parameter);
  CHECK_THROWS_AS(hermite(N_MAX + 1, 0.0), invalid_parameter);
  CHECK_THROWS_AS(validate_state(OscillatorState{-1, Rapidity{0.0}}), invalid_parameter);
  CHECK_THROWS_AS(validate_state(OscillatorState{0, Rapidity{std::nan("")}}), invalid_parameter);
  const Grid1D coarse{-8.0, 8.0, 21};
  CHECK_THROWS_AS(oscillator_residual({0, Rapidity{0.0}}, Grid2D{coarse, coarse}),
                  invalid_parameter);
}
