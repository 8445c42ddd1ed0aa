#include "pdm/units.hpp"

#include <cmath>

namespace pdm::units {

namespace {
constexpr double hbar_js = 1.054571817e-34;
constexpr double electron_mass_kg = 9.1093837015e-31;
constexpr double electron_charge_c = 1.602176634e-19;
}  // namespace

double kinetic_constant_ev_nm2() {
  // J m^2 -> eV nm^2 is a factor 1e18 / e.
  return hbar_js * hbar_js / (2.0 * electron_mass_kg) / electron_charge_c * 1e18;
}

double energy_to_dimensionless(double e_ev, double l0_nm) {
  if (!(l0_nm > 0.0)) raise(errc::invalid_argument, "length scale L0 must be positive");
  return e_ev * l0_nm * l0_nm / kinetic_constant_ev_nm2();
}

double energy_from_dimensionless(double e, double l0_nm) {
  if (!(l0_nm > 0.0)) raise(errc::invalid_argument, "length scale L0 must be positive");
  return e * kinetic_constant_ev_nm2() / (l0_nm * l0_nm);
}

double length_to_dimensionless(double z_nm, double l0_nm) {
  if (!(l0_nm > 0.0)) raise(errc::invalid_argument, "length scale L0 must be positive");
  return z_nm / l0_nm;
}

double length_from_dimensionless(double z, double l0_nm) {
  if (!(l0_nm > 0.0)) raise(errc::invalid_argument, "length scale L0 must be positive");
  return z * l0_nm;
}

ParabolicDouble parabolic_to_dimensionless(const ParabolicDouble& physical, double l0_nm) {
  ParabolicDouble out = physical;
  out.a = length_to_dimensionless(physical.a, l0_nm);
  out.b = length_to_dimensionless(physical.b, l0_nm);
  out.c = length_to_dimensionless(physical.c, l0_nm);
  out.d = length_to_dimensionless(physical.d, l0_nm);
  out.v0 = energy_to_dimensionless(physical.v0, l0_nm);
  return out;  // relative masses are unchanged
}

}  // namespace pdm::units
