#include "pdm/closedform.hpp"

#include <cmath>
#include <sstream>

namespace pdm::closedform {

namespace {

double poschl_teller_lambda(double mu, double sigma, const Ordering& ord) {
  const double rad = mu * mu * sigma * sigma + 2.0 * ord.eta() - 4.0 * ord.nu();
  if (rad < 0.0) {
    std::ostringstream os;
    os << "no bound states: mu^2 sigma^2 + 2 eta - 4 nu = " << rad << " < 0 (lambda complex)";
    raise(errc::no_bound_state, os.str());
  }
  const double lambda = 0.5 + std::sqrt(rad);
  if (!(lambda * (lambda - 1.0) > 0.0)) {
    std::ostringstream os;
    os << "no bound states: lambda (lambda - 1) = " << lambda * (lambda - 1.0) << " <= 0";
    raise(errc::no_bound_state, os.str());
  }
  return lambda;
}

}  // namespace

double poschl_teller_energy(double mu, double sigma, const Ordering& ord, int n) {
  if (n < 0) raise(errc::invalid_argument, "poschl_teller_energy: level index must be >= 0");
  const double lambda = poschl_teller_lambda(mu, sigma, ord);
  if (!(n <= lambda - 1.0)) {
    std::ostringstream os;
    os << "level index " << n << " outside the admissible range n <= lambda - 1 = "
       << lambda - 1.0;
    raise(errc::invalid_argument, os.str());
  }
  const double s2 = sigma * sigma;
  const double d = n - lambda + 1.0;
  return -d * d / s2 + (0.25 + 2.0 * ord.eta() - 3.0 * ord.nu()) / s2;
}

int poschl_teller_level_count(double mu, double sigma, const Ordering& ord) {
  const double lambda = poschl_teller_lambda(mu, sigma, ord);
  return static_cast<int>(std::floor(lambda - 1.0)) + 1;
}

double isotonic_energy(double omega, double g, int n) {
  if (!(omega > 0.0)) raise(errc::invalid_argument, "isotonic_energy: omega must be positive");
  if (n < 0) raise(errc::invalid_argument, "isotonic_energy: level index must be >= 0");
  if (g < -0.5) {
    std::ostringstream os;
    os << "non-isotonic regime: g = " << g << " violates g >= -1/2";
    raise(errc::condition_violated, os.str());
  }
  return omega * (2.0 * n + 1.0 + 0.5 * std::sqrt(1.0 + 2.0 * g));
}

double singular_energy(double a, double b, double c, const Ordering& ord, int n) {
  if (n < 0) raise(errc::invalid_argument, "singular_energy: level index must be >= 0");
  if (!(c > 0.0)) raise(errc::invalid_argument, "singular_energy: c must be positive");
  const double nu = ord.nu();
  const double eta = ord.eta();
  const double a_floor = -1.25 - (2.0 * eta - nu);
  if (!(a > a_floor)) {
    std::ostringstream os;
    os << "well-shape condition violated: requires A > -5/4 - (2 eta - nu) = " << a_floor
       << ", got A = " << a;
    raise(errc::condition_violated, os.str());
  }
  const double g = g_parameter(ord, GContext::singular(a));
  if (!(g > -0.5)) {
    std::ostringstream os;
    os << "real-spectrum condition violated: requires g > -1/2, got g = " << g;
    raise(errc::condition_violated, os.str());
  }
  const double d = 2.0 * n + 1.0 + 0.5 * std::sqrt(1.0 + 2.0 * g);
  return -(a * b) * (a * b) / (4.0 * c * d * d);
}

double half_power_oscillator_estar(double omega, double g, int n) {
  return isotonic_energy(omega, g, n);
}

}  // namespace pdm::closedform
