#pragma once

#include "pdm/profiles.hpp"

namespace pdm::units {

// hbar^2/(2 m_e) in eV nm^2 (CODATA hbar, m_e, e).
double kinetic_constant_ev_nm2();

// Dimensionless convention: lengths scaled by L0, energies by
// hbar^2/(2 m_e L0^2), masses relative to m_e.
double energy_to_dimensionless(double e_ev, double l0_nm);
double energy_from_dimensionless(double e, double l0_nm);
double length_to_dimensionless(double z_nm, double l0_nm);
double length_from_dimensionless(double z, double l0_nm);

// Maps a double-parabolic model given in eV/nm/m_e to dimensionless form.
ParabolicDouble parabolic_to_dimensionless(const ParabolicDouble& physical, double l0_nm);

}  // namespace pdm::units
