#include <doctest.h>

#include <cmath>

#include "pdm/io.hpp"
#include "pdm/units.hpp"

namespace u = pdm::units;
namespace io = pdm::io;

TEST_CASE("kinetic constant and scalar conversions") {
  const double k = u::kinetic_constant_ev_nm2();
  CHECK(std::abs(k - 0.0380998) < 1e-6);
  CHECK(u::energy_to_dimensionless(0.3, 1.0) == doctest::Approx(7.8741).epsilon(1e-4));
  for (double l0 : {0.5, 1.0, 2.0}) {
    const double e = 0.127;
    CHECK(u::energy_from_dimensionless(u::energy_to_dimensionless(e, l0), l0) ==
          doctest::Approx(e).epsilon(1e-12));
    CHECK(u::length_from_dimensionless(u::length_to_dimensionless(17.5, l0), l0) ==
          doctest::Approx(17.5).epsilon(1e-12));
  }
  CHECK_THROWS_AS((void)u::energy_to_dimensionless(1.0, 0.0), pdm::Error);
}

TEST_CASE("parabolic model mapping scales lengths and energies") {
  const pdm::ParabolicDouble phys{9.4, 11.0, 25.0, 31.0, 0.3, 0.0960, 0.0655};
  const auto dimless = u::parabolic_to_dimensionless(phys, 2.0);
  CHECK(dimless.a == doctest::Approx(4.7));
  CHECK(dimless.d == doctest::Approx(15.5));
  CHECK(dimless.v0 == doctest::Approx(0.3 * 4.0 / u::kinetic_constant_ev_nm2()));
  CHECK(dimless.m0 == phys.m0);
  CHECK(dimless.m1 == phys.m1);
}

TEST_CASE("number formatting is deterministic and 9 significant digits") {
  CHECK(io::format_number(-8.250000001) == "-8.25");  // %.9g drops trailing zeros
  CHECK(io::format_number(-8.250000801) == "-8.2500008");
  CHECK(io::format_number(1.0 / 3.0) == "0.333333333");
  CHECK(io::format_number(1e10) == "1e+10");
  CHECK(io::format_number(std::numeric_limits<double>::infinity()) == "inf");
  CHECK(io::format_number(0.0) == "0");
}

TEST_CASE("spectrum json layout") {
  pdm::SpectrumResult result;
  result.method = pdm::Method::multi_step_poles;
  result.ordering = "bdd";
  result.n = 2000;
  result.tol = 1e-6;
  result.energies = {-8.25, -6.875};
  result.residuals = {1e-9, 2e-9};
  const std::string a = io::spectrum_to_json(result);
  const std::string b = io::spectrum_to_json(result);
  CHECK(a == b);
  CHECK(a.find("\"method\": \"poles\"") != std::string::npos);
  CHECK(a.find("\"ordering\": \"bdd\"") != std::string::npos);
  CHECK(a.find("\"status\": \"ok\"") != std::string::npos);
  CHECK(a.find("-8.25") != std::string::npos);

  result.energies.clear();
  result.residuals.clear();
  CHECK(io::spectrum_to_json(result).find("\"status\": \"empty\"") != std::string::npos);
}

TEST_CASE("csv headers are pinned") {
  pdm::ScanResult scan;
  scan.energies = {1.0, 2.0};
  scan.values = {0.5, std::numeric_limits<double>::infinity()};
  const std::string csv = io::scan_to_csv(scan);
  CHECK(csv.rfind("E,Rc\n", 0) == 0);
  CHECK(csv.find("inf") != std::string::npos);

  const std::string wf = io::wavefunction_to_csv({{0.5, {1.0, -2.0}}});
  CHECK(wf.rfind("z,Re_psi,Im_psi\n", 0) == 0);
  CHECK(wf.find("0.5,1,-2") != std::string::npos);
}
