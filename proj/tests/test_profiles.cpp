#include <doctest.h>

#include <cmath>

#include "pdm/profiles.hpp"

using namespace pdm;

TEST_CASE("symmetric-rational model endpoints and interior values") {
  const auto model = build_model(SymmetricRational{3.0, 4.0}, -2.0, 2.0);
  CHECK(model.v0() == doctest::Approx(-1.8).epsilon(1e-15));
  CHECK(model.m0() == doctest::Approx(3.2).epsilon(1e-15));
  CHECK(model.v2() == model.v0());
  CHECK(model.m2() == model.m0());
  const auto mid = model.eval(0.0);
  CHECK(mid.v == doctest::Approx(-9.0).epsilon(1e-15));
  CHECK(mid.m == doctest::Approx(16.0).epsilon(1e-15));
  const auto outer = model.eval(-12.0);
  CHECK(outer.v == model.v0());
  CHECK(outer.m == model.m0());
  // declared continuous: outer constants equal the inner endpoint values
  CHECK(model.v0() == model.inner_potential(model.z0()));
  CHECK(model.m0() == model.inner_mass(model.z0()));
}

TEST_CASE("morse-like model values") {
  const auto model = build_model(MorseLike{10.0, 2.0, 2.0}, -0.8, 0.8);
  const auto mid = model.eval(0.0);
  CHECK(mid.v == doctest::Approx(-10.0).epsilon(1e-14));
  CHECK(mid.m == doctest::Approx(8.0).epsilon(1e-14));
  CHECK(model.v0() == doctest::Approx(model.inner_potential(-0.8)));
  CHECK(model.v2() == doctest::Approx(model.inner_potential(0.8)));
}

TEST_CASE("exponential model outer constants") {
  const auto model = build_model(Exponential{3.0, 0.5, 1.0, 1.0}, -2.0, 2.0);
  const double v2 = 3.0 * std::exp(2.0);
  CHECK(model.v2() == doctest::Approx(v2).epsilon(1e-14));
  CHECK(model.v0() == doctest::Approx(v2).epsilon(1e-14));
  CHECK(model.m0() == doctest::Approx(0.5 * std::exp(-2.0)).epsilon(1e-14));
  CHECK(model.m2() == doctest::Approx(0.5 * std::exp(2.0)).epsilon(1e-14));
}

TEST_CASE("hyperbolic mass interpolates the morse mass endpoints") {
  const double sigma = 2.0, m0 = 2.0;
  const auto morse = build_model(MorseLike{10.0, m0, sigma}, -0.8, 0.8);
  for (double tau : {0.5, 2.75, 7.0}) {
    const auto model = build_model(HyperbolicMass{tau, 10.0, m0, sigma}, -0.8, 0.8);
    CHECK(model.inner_mass(-0.8) == doctest::Approx(morse.inner_mass(-0.8)).epsilon(1e-12));
    CHECK(model.inner_mass(0.8) == doctest::Approx(morse.inner_mass(0.8)).epsilon(1e-12));
    for (int i = 0; i <= 32; ++i) {
      const double z = -0.8 + 1.6 * i / 32.0;
      CHECK(model.inner_mass(z) > 0.0);
    }
  }
}

TEST_CASE("even profiles are symmetric about the origin") {
  const ProfileFamily families[4] = {SymmetricRational{3.0, 4.0}, GaussianMass{3.0, 4.0},
                                     GaussianMassDelta{3.0, 4.0, 7.0},
                                     GaussianPotentialDelta{3.0, 4.0, 1.0}};
  for (const auto& family : families) {
    const auto model = build_model(family, -2.0, 2.0);
    for (int i = 0; i <= 40; ++i) {
      const double z = -2.0 + 4.0 * i / 40.0;
      const auto a = model.eval(z), b = model.eval(-z);
      CHECK(a.v == doctest::Approx(b.v).epsilon(1e-14));
      CHECK(a.m == doctest::Approx(b.m).epsilon(1e-14));
    }
  }
}

TEST_CASE("analytic mass derivatives match finite differences") {
  const ProfileFamily families[] = {SymmetricRational{3.0, 4.0},
                                    GaussianMass{3.0, 4.0},
                                    GaussianMassDelta{3.0, 4.0, 7.0},
                                    GaussianPotential{3.0, 4.0},
                                    MorseLike{10.0, 2.0, 2.0},
                                    HyperbolicMass{2.75, 10.0, 2.0, 2.0},
                                    Exponential{3.0, 0.5, 1.0, 1.0},
                                    SingularParabolicMass{2.0, -10.0, 1.0}};
  for (const auto& family : families) {
    const bool singular = std::holds_alternative<SingularParabolicMass>(family);
    const double z0 = singular ? 0.1 : (std::holds_alternative<MorseLike>(family) ||
                                                std::holds_alternative<HyperbolicMass>(family)
                                            ? -0.8
                                            : -2.0);
    const double z1 = singular ? 4.0 : -z0;
    const auto model = build_model(family, z0, z1);
    for (int i = 1; i < 12; ++i) {
      const double z = z0 + (z1 - z0) * i / 12.0;
      const double h = 1e-5 * (1.0 + std::abs(z));
      const double fd1 = (model.inner_mass(z + h) - model.inner_mass(z - h)) / (2.0 * h);
      const double fd2 =
          (model.inner_mass(z + h) - 2.0 * model.inner_mass(z) + model.inner_mass(z - h)) /
          (h * h);
      CHECK(model.inner_mass_d1(z) ==
            doctest::Approx(fd1).epsilon(1e-6).scale(std::abs(fd1) + 1.0));
      CHECK(model.inner_mass_d2(z) ==
            doctest::Approx(fd2).epsilon(1e-4).scale(std::abs(fd2) + 1.0));
    }
  }
}

TEST_CASE("midpoint discretization samples the profile exactly") {
  const auto model = build_model(SymmetricRational{3.0, 4.0}, -2.0, 2.0);
  SUBCASE("two inner cells") {
    const auto grid = discretize(model, 2);
    REQUIRE(grid.n_interfaces() == 3);
    REQUIRE(grid.regions.size() == 4);
    CHECK(grid.regions[1].v == doctest::Approx(-4.5).epsilon(1e-15));
    CHECK(grid.regions[1].m == doctest::Approx(8.0).epsilon(1e-15));
    CHECK(grid.regions[2].v == doctest::Approx(-4.5).epsilon(1e-15));
    CHECK(grid.regions[2].m == doctest::Approx(8.0).epsilon(1e-15));
  }
  SUBCASE("sampling is exact for every n") {
    for (int n : {1, 7, 100}) {
      const auto grid = discretize(model, n);
      const double h = (model.z1() - model.z0()) / n;
      for (int j = 1; j <= n; ++j) {
        const double mid = model.z0() + h * (j - 0.5);
        CHECK(grid.regions[j].v == model.inner_potential(mid));
        CHECK(grid.regions[j].m == model.inner_mass(mid));
      }
      CHECK(grid.regions.front().v == model.v0());
      CHECK(grid.regions.back().v == model.v2());
    }
  }
  SUBCASE("constant inner profile gives equal cells") {
    const auto steps_model = build_model(
        ProfileFamily{ExplicitSteps{1.0, 1.0, {{0.0, 2.0, 3.0}, {1.0, 1.0, 1.0}}}});
    const auto grid = discretize(steps_model, 99);
    REQUIRE(grid.regions.size() == 3);
    CHECK(grid.regions[1].v == 2.0);
    CHECK(grid.regions[1].m == 3.0);
  }
}

TEST_CASE("explicit steps round-trip through discretize verbatim") {
  ExplicitSteps steps;
  steps.v_left = 0.5;
  steps.m_left = 1.5;
  steps.steps = {{-1.0, 2.0, 0.7}, {0.25, -3.0, 2.2}, {1.75, 0.5, 1.5}};
  const auto model = build_model(ProfileFamily{steps});
  for (int n : {1, 5, 4000}) {
    const auto grid = discretize(model, n);
    REQUIRE(grid.interfaces.size() == 3);
    CHECK(grid.interfaces[0] == -1.0);
    CHECK(grid.interfaces[1] == 0.25);
    CHECK(grid.interfaces[2] == 1.75);
    CHECK(grid.regions[0].v == 0.5);
    CHECK(grid.regions[2].v == -3.0);
    CHECK(grid.regions[3].m == 1.5);
  }
}

TEST_CASE("single-interface explicit steps with equal media is free space") {
  const auto model =
      build_model(ProfileFamily{ExplicitSteps{0.25, 2.0, {{0.3, 0.25, 2.0}}}});
  for (double z : {-5.0, 0.3, 7.0}) {
    const auto local = model.eval(z);
    CHECK(local.v == 0.25);
    CHECK(local.m == 2.0);
  }
}

TEST_CASE("invalid models are rejected with diagnostics") {
  CHECK_THROWS_AS((void)build_model(SymmetricRational{3.0, 4.0}, 2.0, -2.0), Error);
  CHECK_THROWS_AS((void)build_model(SymmetricRational{0.0, 4.0}, -2.0, 2.0), Error);
  CHECK_THROWS_AS((void)build_model(SingularParabolicMass{2.0, -10.0, 1.0}, -0.1, 4.0), Error);
  CHECK_THROWS_AS((void)build_model(SingularParabolicMass{-2.0, -10.0, 1.0}, 0.1, 4.0), Error);
  CHECK_THROWS_AS((void)build_model(Exponential{-3.0, 0.5, 1.0, 1.0}, -2.0, 2.0), Error);
  ExplicitSteps bad;
  bad.v_left = 0.0;
  bad.m_left = 1.0;
  bad.steps = {{0.0, 1.0, -2.0}};
  CHECK_THROWS_AS((void)build_model(ProfileFamily{bad}), Error);
  CHECK_THROWS_AS((void)discretize(build_model(SymmetricRational{3.0, 4.0}, -2.0, 2.0), 0), Error);
}
