#pragma once

#include <complex>
#include <string>

#include "pdm/errors.hpp"

namespace pdm {

// Kinetic-energy-operator ordering.
//
// The ambiguity constants are nu = alpha + gamma and
// eta = 2(alpha + gamma + alpha*gamma). Named orderings:
//   bdd (alpha=gamma=0), zk (alpha=gamma=-1/2), lk (alpha=0, gamma=-1/2),
//   gw (alpha=-1, gamma=0), tl (alpha+gamma=-2/3, alpha*gamma=0).
// The symmetric von Roos family keeps alpha = gamma free with beta = -1-2*alpha.
class Ordering {
 public:
  enum class Kind { von_roos_symmetric, bdd, zk, lk, gw, tl };

  static Ordering bdd() { return Ordering(Kind::bdd, 0.0); }
  static Ordering zk() { return Ordering(Kind::zk, -0.5); }
  static Ordering lk() { return Ordering(Kind::lk, 0.0); }
  static Ordering gw() { return Ordering(Kind::gw, -1.0); }
  static Ordering tl() { return Ordering(Kind::tl, 0.0); }
  static Ordering von_roos(double alpha) { return Ordering(Kind::von_roos_symmetric, alpha); }

  // Accepts "bdd", "zk", "lk", "gw", "tl", "vr:<alpha>".
  static Ordering parse(const std::string& name);

  Kind kind() const { return kind_; }
  double alpha() const { return alpha_; }
  double nu() const { return nu_; }
  double eta() const { return eta_; }

  // True when wave-function junction conditions are defined for this ordering.
  bool can_match() const;

  std::string name() const;

 private:
  Ordering(Kind kind, double alpha);

  Kind kind_;
  double alpha_;
  double nu_;
  double eta_;
};

// Junction coefficients: psi(z-) = mu * psi(z+), psi'(z-) = rho * psi'(z+).
struct MatchCoeffs {
  double mu;
  double rho;
};

MatchCoeffs boundary_coeffs(const Ordering& ord, double m_left, double m_right);

// Single-interface reflection factor r = (k_l*mu - k_r*rho) / (k_l*mu + k_r*rho).
std::complex<double> step_reflection_factor(const Ordering& ord,
                                            std::complex<double> k_left,
                                            std::complex<double> k_right,
                                            double m_left, double m_right);

// Inverse-square coefficient of the transformed constant-mass potential.
struct GContext {
  enum class Kind { exponential_dh, singular_dh };
  Kind kind;
  double a;  // singular-well strength parameter, unused for exponential_dh

  static GContext exponential() { return {Kind::exponential_dh, 0.0}; }
  static GContext singular(double a) { return {Kind::singular_dh, a}; }
};

double g_parameter(const Ordering& ord, const GContext& ctx);

enum class IsotonicClass {
  non_isotonic,            // g < -1/2
  isotonic_negative_g,     // -1/2 <= g < 0
  isotonic_nonnegative_g,  // g >= 0
};

IsotonicClass classify_isotonic(double g);

}  // namespace pdm
