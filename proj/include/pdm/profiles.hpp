#pragma once

#include <functional>
#include <variant>
#include <vector>

#include "pdm/errors.hpp"

namespace pdm {

// Profile families of the graded inner region. All quantities are
// dimensionless (energy unit hbar^2/(2 M0) = 1, masses relative to M0).

// V = -mu^2/(1+z^2), m = sigma^2/(1+z^2).
struct SymmetricRational {
  double mu;
  double sigma;
};

// V = -mu^2/(1+z^2), m = sigma^2 exp(-(z^2/z0^2) ln(1+z0^2)).
struct GaussianMass {
  double mu;
  double sigma;
};

// V = -mu^2/(1+z^2), m = sigma^2/(1+z0^2) (z0^2 exp(-delta z^2) + 1).
struct GaussianMassDelta {
  double mu;
  double sigma;
  double delta;  // > 0
};

// V = -mu^2 exp(-(z^2/z0^2) ln(1+z0^2)), m = sigma^2/(1+z^2).
struct GaussianPotential {
  double mu;
  double sigma;
};

// V = -mu^2/(1+z0^2) (z0^2 exp(-delta z^2) + 1), m = sigma^2/(1+z^2).
struct GaussianPotentialDelta {
  double mu;
  double sigma;
  double delta;  // > 0
};

// V = -v0 e^{sigma z}(2 - e^{sigma z}), m = m0 sigma^2 e^{-2 sigma z}.
struct MorseLike {
  double v0;
  double m0;
  double sigma;
};

// Morse-like potential with a tanh-graded mass that interpolates the
// Morse mass endpoints; tau controls the transition sharpness.
struct HyperbolicMass {
  double tau;
  double v0;
  double m0;
  double sigma;
};

// Two adjoining parabolic wells between abrupt outer walls. The junctions
// sit at z=b and z=d; the parabolas meet continuously at z=c.
struct ParabolicDouble {
  double a;
  double b;
  double c;
  double d;
  double v0;  // outer potential, also the parabola scale
  double m0;  // outer mass
  double m1;  // mass at the parabola minima
};

// V = vc e^{cz}, m = mu0 e^{cz}; outer left potential is lambda * V(z1).
struct Exponential {
  double vc;      // > 0
  double mu0;     // > 0
  double c;
  double lambda;
};

// m = c z^2, V = (a/c)(1/z^4 + b/z^2); defined for z > 0 with a > 0, b < 0.
struct SingularParabolicMass {
  double a;
  double b;
  double c;
};

// An already-discrete structure given verbatim.
struct ExplicitSteps {
  struct Step {
    double z;        // interface position
    double v_right;  // region values to the right of the interface
    double m_right;
  };
  double v_left;  // region values left of the first interface
  double m_left;
  std::vector<Step> steps;
};

using ProfileFamily =
    std::variant<SymmetricRational, GaussianMass, GaussianMassDelta, GaussianPotential,
                 GaussianPotentialDelta, MorseLike, HyperbolicMass, ParabolicDouble, Exponential,
                 SingularParabolicMass, ExplicitSteps>;

// Discretized structure: n interfaces, n+1 constant-coefficient regions.
// Region j lies between interfaces[j-1] and interfaces[j]; region 0 and
// region n are the half-infinite outer media.
struct StepGrid {
  struct Region {
    double v;
    double m;
  };
  std::vector<double> interfaces;  // strictly increasing
  std::vector<Region> regions;     // size = interfaces.size() + 1

  int n_interfaces() const { return static_cast<int>(interfaces.size()); }
  int n_inner() const { return static_cast<int>(regions.size()) - 2; }
};

class HeterostructureModel {
 public:
  HeterostructureModel(ProfileFamily family, double z0, double z1, double v0, double m0, double v2,
                       double m2, std::function<double(double)> inner_potential,
                       std::function<double(double)> inner_mass,
                       std::function<double(double)> inner_mass_d1,
                       std::function<double(double)> inner_mass_d2);

  double z0() const { return z0_; }
  double z1() const { return z1_; }
  double v0() const { return v0_; }
  double m0() const { return m0_; }
  double v2() const { return v2_; }
  double m2() const { return m2_; }
  const ProfileFamily& family() const { return family_; }

  // Piecewise evaluation: outer constants for z <= z0 / z >= z1.
  struct Local {
    double v;
    double m;
  };
  Local eval(double z) const;

  double inner_potential(double z) const { return inner_potential_(z); }
  double inner_mass(double z) const { return inner_mass_(z); }
  double inner_mass_d1(double z) const { return inner_mass_d1_(z); }
  double inner_mass_d2(double z) const { return inner_mass_d2_(z); }

 private:
  ProfileFamily family_;
  double z0_, z1_;
  double v0_, m0_, v2_, m2_;
  std::function<double(double)> inner_potential_;
  std::function<double(double)> inner_mass_;
  std::function<double(double)> inner_mass_d1_;
  std::function<double(double)> inner_mass_d2_;
};

// Builds the model with outer constants fixed by the family's convention.
// For ParabolicDouble and ExplicitSteps the junctions are implied by the
// family itself and the passed z0/z1 must agree (use the 1-argument form).
HeterostructureModel build_model(const ProfileFamily& family, double z0, double z1);
HeterostructureModel build_model(const ProfileFamily& family);

// Midpoint-sampled uniform discretization of the inner region into n cells
// (n+1 interfaces). ExplicitSteps models are returned verbatim regardless of n.
StepGrid discretize(const HeterostructureModel& model, int n);

}  // namespace pdm
