#include <doctest.h>

#include <cmath>
#include <random>

#include "pdm/ordering.hpp"

using pdm::Ordering;

TEST_CASE("ambiguity constants of the named orderings") {
  auto check = [](const Ordering& ord, double nu, double eta) {
    CHECK(ord.nu() == doctest::Approx(nu).epsilon(1e-15));
    CHECK(ord.eta() == doctest::Approx(eta).epsilon(1e-15));
  };
  check(Ordering::bdd(), 0.0, 0.0);
  check(Ordering::zk(), -1.0, -1.5);
  check(Ordering::lk(), -0.5, -1.0);
  check(Ordering::gw(), -1.0, -2.0);
  check(Ordering::tl(), -2.0 / 3.0, -4.0 / 3.0);
}

TEST_CASE("matching capability flags") {
  CHECK(Ordering::bdd().can_match());
  CHECK(Ordering::zk().can_match());
  CHECK(Ordering::tl().can_match());
  CHECK(Ordering::von_roos(0.37).can_match());
  CHECK_FALSE(Ordering::lk().can_match());
  CHECK_FALSE(Ordering::gw().can_match());
}

TEST_CASE("ordering names parse and round-trip") {
  CHECK(Ordering::parse("bdd").kind() == Ordering::Kind::bdd);
  CHECK(Ordering::parse("tl").kind() == Ordering::Kind::tl);
  const Ordering vr = Ordering::parse("vr:-0.25");
  CHECK(vr.kind() == Ordering::Kind::von_roos_symmetric);
  CHECK(vr.alpha() == doctest::Approx(-0.25));
  CHECK_THROWS_AS((void)Ordering::parse("nope"), pdm::Error);
  CHECK_THROWS_AS((void)Ordering::parse("vr:abc"), pdm::Error);
}

TEST_CASE("junction coefficients") {
  const auto bdd = pdm::boundary_coeffs(Ordering::bdd(), 1.0, 2.0);
  CHECK(bdd.mu == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(bdd.rho == doctest::Approx(0.5).epsilon(1e-15));

  const auto tl = pdm::boundary_coeffs(Ordering::tl(), 1.0, 2.0);
  CHECK(tl.mu == doctest::Approx(4.0 / 5.0).epsilon(1e-15));
  CHECK(tl.rho == doctest::Approx(7.0 / 11.0).epsilon(1e-15));

  for (const auto& ord : {Ordering::bdd(), Ordering::zk(), Ordering::tl(), Ordering::von_roos(0.7)}) {
    const auto c = pdm::boundary_coeffs(ord, 1.37, 1.37);
    CHECK(c.mu == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(c.rho == doctest::Approx(1.0).epsilon(1e-15));
  }

  CHECK_THROWS_AS((void)pdm::boundary_coeffs(Ordering::lk(), 1.0, 2.0), pdm::Error);
  CHECK_THROWS_AS((void)pdm::boundary_coeffs(Ordering::gw(), 1.0, 2.0), pdm::Error);
  try {
    (void)pdm::boundary_coeffs(Ordering::gw(), 1.0, 2.0);
  } catch (const pdm::Error& err) {
    CHECK(err.code() == pdm::errc::unsupported_matching);
  }
}

TEST_CASE("junction coefficient reciprocity over random mass pairs") {
  std::mt19937 rng(20240811);
  std::uniform_real_distribution<double> mass(0.05, 20.0);
  std::uniform_real_distribution<double> alpha(-1.5, 1.0);
  for (int i = 0; i < 1000; ++i) {
    const double ml = mass(rng), mr = mass(rng);
    const Ordering ords[4] = {Ordering::bdd(), Ordering::zk(), Ordering::tl(),
                              Ordering::von_roos(alpha(rng))};
    for (const auto& ord : ords) {
      const auto fwd = pdm::boundary_coeffs(ord, ml, mr);
      const auto bwd = pdm::boundary_coeffs(ord, mr, ml);
      CHECK(std::abs(fwd.mu * bwd.mu - 1.0) < 1e-14);
      CHECK(std::abs(fwd.rho * bwd.rho - 1.0) < 1e-14);
    }
  }
}

TEST_CASE("von Roos specializations coincide with the named orderings") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> mass(0.1, 10.0);
  const Ordering vr0 = Ordering::von_roos(0.0);
  const Ordering vrz = Ordering::von_roos(-0.5);
  CHECK(std::abs(vr0.nu() - Ordering::bdd().nu()) < 1e-15);
  CHECK(std::abs(vr0.eta() - Ordering::bdd().eta()) < 1e-15);
  CHECK(std::abs(vrz.nu() - Ordering::zk().nu()) < 1e-15);
  CHECK(std::abs(vrz.eta() - Ordering::zk().eta()) < 1e-15);
  for (int i = 0; i < 50; ++i) {
    const double ml = mass(rng), mr = mass(rng);
    const auto a = pdm::boundary_coeffs(vr0, ml, mr);
    const auto b = pdm::boundary_coeffs(Ordering::bdd(), ml, mr);
    CHECK(std::abs(a.mu - b.mu) < 1e-15 * (1.0 + std::abs(b.mu)));
    CHECK(std::abs(a.rho - b.rho) < 1e-15 * (1.0 + std::abs(b.rho)));
    const auto c = pdm::boundary_coeffs(vrz, ml, mr);
    const auto d = pdm::boundary_coeffs(Ordering::zk(), ml, mr);
    CHECK(std::abs(c.mu - d.mu) < 1e-15 * (1.0 + std::abs(d.mu)));
    CHECK(std::abs(c.rho - d.rho) < 1e-15 * (1.0 + std::abs(d.rho)));
  }
}

TEST_CASE("single-step reflection factors") {
  using cd = std::complex<double>;
  // no interface at all
  CHECK(std::abs(pdm::step_reflection_factor(Ordering::bdd(), cd(1.3), cd(1.3), 2.0, 2.0)) <
        1e-15);
  // the zk factor depends on wavenumbers only
  const cd r_zk = pdm::step_reflection_factor(Ordering::zk(), cd(1.0), cd(2.0), 1.0, 4.0);
  CHECK(r_zk.real() == doctest::Approx(-1.0 / 3.0).epsilon(1e-14));
  CHECK(std::abs(r_zk.imag()) < 1e-15);
  // bdd with equal wavenumbers but a mass step
  const cd r_bdd = pdm::step_reflection_factor(Ordering::bdd(), cd(1.0), cd(1.0), 1.0, 2.0);
  CHECK(r_bdd.real() == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
}

TEST_CASE("reflection factor antisymmetry and magnitude bound") {
  using cd = std::complex<double>;
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> mass(0.1, 8.0);
  std::uniform_real_distribution<double> wav(0.05, 6.0);
  for (const auto& ord : {Ordering::bdd(), Ordering::zk(), Ordering::tl(),
                          Ordering::von_roos(-0.8)}) {
    for (int i = 0; i < 200; ++i) {
      const double ml = mass(rng), mr = mass(rng);
      const cd kl(wav(rng)), kr(wav(rng));
      const cd fwd = pdm::step_reflection_factor(ord, kl, kr, ml, mr);
      const cd bwd = pdm::step_reflection_factor(ord, kr, kl, mr, ml);
      CHECK(std::abs(fwd + bwd) < 1e-14);
      CHECK(std::abs(fwd) < 1.0);
    }
  }
}

TEST_CASE("zk reflection factor is mass-independent at fixed wavenumbers") {
  using cd = std::complex<double>;
  const cd k1(0.9), k2(2.4);
  const cd base = pdm::step_reflection_factor(Ordering::zk(), k1, k2, 1.0, 3.0);
  for (double scale : {0.3, 2.0, 17.0}) {
    const cd scaled = pdm::step_reflection_factor(Ordering::zk(), k1, k2, scale * 1.0, scale * 3.0);
    CHECK(std::abs(base - scaled) < 1e-15);
  }
}

TEST_CASE("inverse-square coefficient g per ordering") {
  const auto expo = pdm::GContext::exponential();
  CHECK(pdm::g_parameter(Ordering::bdd(), expo) == doctest::Approx(1.5).epsilon(1e-15));
  CHECK(pdm::g_parameter(Ordering::zk(), expo) == doctest::Approx(-0.5).epsilon(1e-15));
  CHECK(pdm::g_parameter(Ordering::lk(), expo) == doctest::Approx(-0.5).epsilon(1e-15));
  CHECK(pdm::g_parameter(Ordering::gw(), expo) == doctest::Approx(-2.5).epsilon(1e-15));
  CHECK(std::abs(pdm::g_parameter(Ordering::tl(), expo) - (-7.0 / 6.0)) < 1e-15);

  const auto sing = pdm::GContext::singular(2.0);
  CHECK(pdm::g_parameter(Ordering::bdd(), sing) == doctest::Approx(8.0).epsilon(1e-15));
  CHECK(pdm::g_parameter(Ordering::zk(), sing) == doctest::Approx(4.0).epsilon(1e-15));
  CHECK(pdm::g_parameter(Ordering::tl(), sing) ==
        doctest::Approx(pdm::g_parameter(Ordering::zk(), sing)).epsilon(1e-15));
}

TEST_CASE("isotonic classification") {
  CHECK(pdm::classify_isotonic(1.5) == pdm::IsotonicClass::isotonic_nonnegative_g);
  CHECK(pdm::classify_isotonic(-0.5) == pdm::IsotonicClass::isotonic_negative_g);
  CHECK(pdm::classify_isotonic(-2.5) == pdm::IsotonicClass::non_isotonic);
  CHECK(pdm::classify_isotonic(0.0) == pdm::IsotonicClass::isotonic_nonnegative_g);
}
