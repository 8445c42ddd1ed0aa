#pragma once

#include "pdm/ordering.hpp"

namespace pdm::closedform {

// Whole-space spectrum of the symmetric-rational family (modified
// Poschl-Teller well after the constant-mass transform):
//   E_n = -(n - lambda + 1)^2/sigma^2 + (1/4 + 2 eta - 3 nu)/sigma^2,
//   lambda = 1/2 + sqrt(mu^2 sigma^2 + 2 eta - 4 nu), n = 0..lambda-1.
double poschl_teller_energy(double mu, double sigma, const Ordering& ord, int n);

// Largest admissible level index for the family above.
int poschl_teller_level_count(double mu, double sigma, const Ordering& ord);

// Isotonic oscillator: E = omega (2n + 1 + d), d = sqrt(1 + 2g)/2, g >= -1/2.
double isotonic_energy(double omega, double g, int n);

// Whole-space spectrum of the singular-potential/parabolic-mass family:
//   E_n = -(a b)^2 / (4 c (2n + 1 + sqrt(1 + 2g)/2)^2), g = 2(2 + 2 eta - nu) + 2a.
// Preconditions: a > -5/4 - (2 eta - nu) (well shape) and g > -1/2 (real spectrum).
double singular_energy(double a, double b, double c, const Ordering& ord, int n);

// Oscillator spectrum reached through the half-power substitution;
// the same formula as isotonic_energy, kept as its own entry point.
double half_power_oscillator_estar(double omega, double g, int n);

}  // namespace pdm::closedform
