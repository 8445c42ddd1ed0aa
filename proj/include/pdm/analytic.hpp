#pragma once

#include <complex>
#include <functional>
#include <string>

#include "pdm/ordering.hpp"
#include "pdm/profiles.hpp"
#include "pdm/spectrum.hpp"

namespace pdm::analytic {

using cd = std::complex<double>;

// Two linearly independent closed-form solutions of the inner-region
// equation, with derivatives by Richardson-extrapolated central differences.
struct InnerBasis {
  enum class Family { symmetric, morse, exponential, singular };
  Family family;
  std::function<cd(double z, double e)> psi1, psi2;
  std::function<cd(double z, double e)> dpsi1, dpsi2;
};

// Fails with unsupported_analytic for families without a closed-form basis,
// no_bound_state / condition_violated when the family's well conditions fail.
InnerBasis inner_basis(const HeterostructureModel& model, const Ordering& ord);

// Junction coefficients of the 2x2 matching system. Defined for the bdd and
// zk orderings only; requires E below both outer potentials.
struct PhiCoeffs {
  cd phi11, phi12, phi21, phi22;
};

PhiCoeffs phi_coefficients(const HeterostructureModel& model, const Ordering& ord,
                           const InnerBasis& basis, double e);

// Real part of det X divided by the basis Wronskian (which removes the
// spurious zeros where a W-type basis pair degenerates); both checked to be
// real up to a 1e-8 relative residue.
double det_x(const HeterostructureModel& model, const Ordering& ord, double e);

// |det X| relative to the row norms of X; ~0 exactly at bound energies.
double matching_residual(const HeterostructureModel& model, const Ordering& ord, double e);

// Scans det X on 2000 points, brackets sign changes, bisects each to tol.
SpectrumResult solve_transcendental(const HeterostructureModel& model, const Ordering& ord,
                                    double e_min, double e_max, double tol);

// Piecewise bound-state wave function at a root of the transcendental
// equation, normalized by the left-tail amplitude R.
struct BoundWavefunction {
  double e = 0.0;
  cd p, q, t;
  double r = 1.0;
  std::function<cd(double z)> value;
};

BoundWavefunction wavefunction(const HeterostructureModel& model, const Ordering& ord, double e,
                               double normalization_r);

// rho(z) = integral of sqrt(m) from z0 (outer regions continued linearly)
// and the transformed constant-mass potential of the quarter-power map.
struct QuarterPowerTransform {
  std::function<double(double z)> rho_of_z;
  std::function<double(double rho)> z_of_rho;
  std::function<double(double z)> v_tilde_of_z;
  std::function<double(double rho)> v_tilde;
};

QuarterPowerTransform quarter_power_transform(const HeterostructureModel& model,
                                              const Ordering& ord);

// Half-power substitution: V*(z) - E* as a function of (z, E), plus the
// family-specific rule isolating the constant E*.
struct HalfPowerTransform {
  std::function<double(double z, double e)> v_star_minus_estar;
  std::function<double(double e)> e_star;  // empty when no rule applies
  std::string e_star_rule;
  double g = 0.0;  // inverse-square coefficient; meaningful for the singular family
};

HalfPowerTransform half_power_transform(const HeterostructureModel& model, const Ordering& ord);

}  // namespace pdm::analytic
