#include "pdmspectra.h"

#include <cstring>
#include <string>
#include <vector>

#include "pdm/analytic.hpp"
#include "pdm/closedform.hpp"
#include "pdm/io.hpp"
#include "pdm/multistep.hpp"
#include "pdm/ordering.hpp"
#include "pdm/profiles.hpp"
#include "pdm/units.hpp"

struct pdm_model {
  pdm::HeterostructureModel model;
};

struct pdm_spectrum {
  pdm::SpectrumResult result;
};

struct pdm_scan {
  pdm::ScanResult result;
};

namespace {

thread_local std::string g_last_error;

pdm_status status_from(const pdm::Error& err) {
  using pdm::errc;
  switch (err.code()) {
    case errc::invalid_argument: return PDM_ERR_INVALID_ARGUMENT;
    case errc::unsupported_matching: return PDM_ERR_UNSUPPORTED_MATCHING;
    case errc::unsupported_analytic: return PDM_ERR_UNSUPPORTED_ANALYTIC;
    case errc::no_bound_state: return PDM_ERR_NO_BOUND_STATE;
    case errc::condition_violated: return PDM_ERR_CONDITION_VIOLATED;
    case errc::domain_error: return PDM_ERR_DOMAIN;
    case errc::non_convergence: return PDM_ERR_NON_CONVERGENCE;
    case errc::numerical_inconsistency: return PDM_ERR_NUMERICAL_INCONSISTENCY;
    case errc::singular_interface: return PDM_ERR_SINGULAR_INTERFACE;
    case errc::io_error: return PDM_ERR_IO;
  }
  return PDM_ERR_UNKNOWN;
}

template <typename Fn>
pdm_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return PDM_OK;
  } catch (const pdm::Error& err) {
    g_last_error = err.what();
    return status_from(err);
  } catch (const std::exception& err) {
    g_last_error = err.what();
    return PDM_ERR_UNKNOWN;
  } catch (...) {
    g_last_error = "unknown error";
    return PDM_ERR_UNKNOWN;
  }
}

pdm_status make_model(pdm_model** out, const pdm::ProfileFamily& family, double z0, double z1) {
  if (!out) return PDM_ERR_INVALID_ARGUMENT;
  *out = nullptr;
  return guarded([&] { *out = new pdm_model{pdm::build_model(family, z0, z1)}; });
}

pdm_status require(bool ok, const char* msg) {
  if (ok) return PDM_OK;
  g_last_error = msg;
  return PDM_ERR_INVALID_ARGUMENT;
}

}  // namespace

extern "C" {

const char* pdm_version(void) { return "1.0.0"; }

const char* pdm_last_error(void) { return g_last_error.c_str(); }

pdm_status pdm_model_symmetric(double mu, double sigma, double z0, double z1, pdm_model** out) {
  return make_model(out, pdm::SymmetricRational{mu, sigma}, z0, z1);
}

pdm_status pdm_model_gaussian_mass(double mu, double sigma, double z0, double z1,
                                   pdm_model** out) {
  return make_model(out, pdm::GaussianMass{mu, sigma}, z0, z1);
}

pdm_status pdm_model_gaussian_mass_delta(double mu, double sigma, double delta, double z0,
                                         double z1, pdm_model** out) {
  return make_model(out, pdm::GaussianMassDelta{mu, sigma, delta}, z0, z1);
}

pdm_status pdm_model_gaussian_potential(double mu, double sigma, double z0, double z1,
                                        pdm_model** out) {
  return make_model(out, pdm::GaussianPotential{mu, sigma}, z0, z1);
}

pdm_status pdm_model_gaussian_potential_delta(double mu, double sigma, double delta, double z0,
                                              double z1, pdm_model** out) {
  return make_model(out, pdm::GaussianPotentialDelta{mu, sigma, delta}, z0, z1);
}

pdm_status pdm_model_morse(double v0, double m0, double sigma, double z0, double z1,
                           pdm_model** out) {
  return make_model(out, pdm::MorseLike{v0, m0, sigma}, z0, z1);
}

pdm_status pdm_model_hyperbolic_mass(double tau, double v0, double m0, double sigma, double z0,
                                     double z1, pdm_model** out) {
  return make_model(out, pdm::HyperbolicMass{tau, v0, m0, sigma}, z0, z1);
}

pdm_status pdm_model_parabolic_double(double a, double b, double c, double d, double v0, double m0,
                                      double m1, pdm_model** out) {
  return make_model(out, pdm::ParabolicDouble{a, b, c, d, v0, m0, m1}, b, d);
}

pdm_status pdm_model_exponential(double vc, double mu0, double c, double lambda, double z0,
                                 double z1, pdm_model** out) {
  return make_model(out, pdm::Exponential{vc, mu0, c, lambda}, z0, z1);
}

pdm_status pdm_model_singular_parabolic_mass(double a, double b, double c, double z0, double z1,
                                             pdm_model** out) {
  return make_model(out, pdm::SingularParabolicMass{a, b, c}, z0, z1);
}

pdm_status pdm_model_explicit_steps(double v_left, double m_left, const double* z,
                                    const double* v_right, const double* m_right, size_t n_steps,
                                    pdm_model** out) {
  if (pdm_status st = require(out && z && v_right && m_right && n_steps > 0,
                              "pdm_model_explicit_steps: null argument"))
    return st;
  pdm::ExplicitSteps steps;
  steps.v_left = v_left;
  steps.m_left = m_left;
  steps.steps.reserve(n_steps);
  for (size_t i = 0; i < n_steps; ++i) steps.steps.push_back({z[i], v_right[i], m_right[i]});
  *out = nullptr;
  return guarded([&] { *out = new pdm_model{pdm::build_model(pdm::ProfileFamily{steps})}; });
}

void pdm_model_free(pdm_model* model) { delete model; }

pdm_status pdm_model_eval(const pdm_model* model, double z, double* v, double* m) {
  if (pdm_status st = require(model && v && m, "pdm_model_eval: null argument")) return st;
  return guarded([&] {
    const auto local = model->model.eval(z);
    *v = local.v;
    *m = local.m;
  });
}

pdm_status pdm_model_bounds(const pdm_model* model, double* z0, double* z1, double* v0, double* m0,
                            double* v2, double* m2) {
  if (pdm_status st = require(model != nullptr, "pdm_model_bounds: null model")) return st;
  if (z0) *z0 = model->model.z0();
  if (z1) *z1 = model->model.z1();
  if (v0) *v0 = model->model.v0();
  if (m0) *m0 = model->model.m0();
  if (v2) *v2 = model->model.v2();
  if (m2) *m2 = model->model.m2();
  return PDM_OK;
}

pdm_status pdm_ordering_nu_eta(const char* ordering, double* nu, double* eta) {
  if (pdm_status st = require(ordering && nu && eta, "pdm_ordering_nu_eta: null argument"))
    return st;
  return guarded([&] {
    const auto ord = pdm::Ordering::parse(ordering);
    *nu = ord.nu();
    *eta = ord.eta();
  });
}

pdm_status pdm_ordering_can_match(const char* ordering, int* can_match) {
  if (pdm_status st = require(ordering && can_match, "pdm_ordering_can_match: null argument"))
    return st;
  return guarded([&] { *can_match = pdm::Ordering::parse(ordering).can_match() ? 1 : 0; });
}

pdm_status pdm_ordering_boundary_coeffs(const char* ordering, double m_left, double m_right,
                                        double* mu, double* rho) {
  if (pdm_status st = require(ordering && mu && rho, "pdm_ordering_boundary_coeffs: null argument"))
    return st;
  return guarded([&] {
    const auto c = pdm::boundary_coeffs(pdm::Ordering::parse(ordering), m_left, m_right);
    *mu = c.mu;
    *rho = c.rho;
  });
}

pdm_status pdm_g_exponential(const char* ordering, double* g) {
  if (pdm_status st = require(ordering && g, "pdm_g_exponential: null argument")) return st;
  return guarded([&] {
    *g = pdm::g_parameter(pdm::Ordering::parse(ordering), pdm::GContext::exponential());
  });
}

pdm_status pdm_g_singular(const char* ordering, double a, double* g) {
  if (pdm_status st = require(ordering && g, "pdm_g_singular: null argument")) return st;
  return guarded([&] {
    *g = pdm::g_parameter(pdm::Ordering::parse(ordering), pdm::GContext::singular(a));
  });
}

pdm_status pdm_classify_isotonic(double g, int* cls) {
  if (pdm_status st = require(cls != nullptr, "pdm_classify_isotonic: null argument")) return st;
  switch (pdm::classify_isotonic(g)) {
    case pdm::IsotonicClass::non_isotonic: *cls = 0; break;
    case pdm::IsotonicClass::isotonic_negative_g: *cls = 1; break;
    case pdm::IsotonicClass::isotonic_nonnegative_g: *cls = 2; break;
  }
  return PDM_OK;
}

pdm_status pdm_find_poles(const pdm_model* model, const char* ordering, int n, double emin,
                          double emax, double tol, pdm_spectrum** out) {
  if (pdm_status st = require(model && ordering && out, "pdm_find_poles: null argument"))
    return st;
  *out = nullptr;
  return guarded([&] {
    const auto ord = pdm::Ordering::parse(ordering);
    const auto grid = pdm::discretize(model->model, n);
    *out = new pdm_spectrum{pdm::multistep::find_poles(grid, ord, emin, emax, tol)};
  });
}

pdm_status pdm_solve_transcendental(const pdm_model* model, const char* ordering, double emin,
                                    double emax, double tol, pdm_spectrum** out) {
  if (pdm_status st = require(model && ordering && out, "pdm_solve_transcendental: null argument"))
    return st;
  *out = nullptr;
  return guarded([&] {
    const auto ord = pdm::Ordering::parse(ordering);
    *out = new pdm_spectrum{pdm::analytic::solve_transcendental(model->model, ord, emin, emax, tol)};
  });
}

size_t pdm_spectrum_size(const pdm_spectrum* s) { return s ? s->result.energies.size() : 0; }

pdm_status pdm_spectrum_energies(const pdm_spectrum* s, double* buf, size_t buflen) {
  if (pdm_status st = require(s && buf, "pdm_spectrum_energies: null argument")) return st;
  if (pdm_status st = require(buflen >= s->result.energies.size(),
                              "pdm_spectrum_energies: buffer too small"))
    return st;
  std::memcpy(buf, s->result.energies.data(), s->result.energies.size() * sizeof(double));
  return PDM_OK;
}

pdm_status pdm_spectrum_residuals(const pdm_spectrum* s, double* buf, size_t buflen) {
  if (pdm_status st = require(s && buf, "pdm_spectrum_residuals: null argument")) return st;
  if (pdm_status st = require(buflen >= s->result.residuals.size(),
                              "pdm_spectrum_residuals: buffer too small"))
    return st;
  std::memcpy(buf, s->result.residuals.data(), s->result.residuals.size() * sizeof(double));
  return PDM_OK;
}

const char* pdm_spectrum_method(const pdm_spectrum* s) {
  static thread_local std::string name;
  if (!s) return "";
  name = pdm::method_name(s->result.method);
  return name.c_str();
}

pdm_status pdm_spectrum_write_json(const pdm_spectrum* s, const char* path) {
  if (pdm_status st = require(s && path, "pdm_spectrum_write_json: null argument")) return st;
  return guarded([&] { pdm::io::write_file(path, pdm::io::spectrum_to_json(s->result)); });
}

pdm_status pdm_spectrum_to_json(const pdm_spectrum* s, char* buf, size_t buflen, size_t* needed) {
  if (pdm_status st = require(s && needed, "pdm_spectrum_to_json: null argument")) return st;
  const std::string json = pdm::io::spectrum_to_json(s->result);
  *needed = json.size() + 1;
  if (!buf || buflen < *needed)
    return require(false, "pdm_spectrum_to_json: buffer too small");
  std::memcpy(buf, json.c_str(), *needed);
  return PDM_OK;
}

void pdm_spectrum_free(pdm_spectrum* s) { delete s; }

pdm_status pdm_scan_reflection(const pdm_model* model, const char* ordering, int n, double emin,
                               double emax, int points, pdm_scan** out) {
  if (pdm_status st = require(model && ordering && out, "pdm_scan_reflection: null argument"))
    return st;
  *out = nullptr;
  return guarded([&] {
    const auto ord = pdm::Ordering::parse(ordering);
    const auto grid = pdm::discretize(model->model, n);
    *out = new pdm_scan{pdm::multistep::scan(grid, ord, emin, emax, points)};
  });
}

size_t pdm_scan_size(const pdm_scan* s) { return s ? s->result.energies.size() : 0; }

pdm_status pdm_scan_point(const pdm_scan* s, size_t i, double* e, double* rc) {
  if (pdm_status st = require(s && e && rc, "pdm_scan_point: null argument")) return st;
  if (pdm_status st = require(i < s->result.energies.size(), "pdm_scan_point: index out of range"))
    return st;
  *e = s->result.energies[i];
  *rc = s->result.values[i];
  return PDM_OK;
}

pdm_status pdm_scan_write_csv(const pdm_scan* s, const char* path) {
  if (pdm_status st = require(s && path, "pdm_scan_write_csv: null argument")) return st;
  return guarded([&] { pdm::io::write_file(path, pdm::io::scan_to_csv(s->result)); });
}

void pdm_scan_free(pdm_scan* s) { delete s; }

pdm_status pdm_poschl_teller_energy(double mu, double sigma, const char* ordering, int level,
                                    double* e) {
  if (pdm_status st = require(ordering && e, "pdm_poschl_teller_energy: null argument")) return st;
  return guarded([&] {
    *e = pdm::closedform::poschl_teller_energy(mu, sigma, pdm::Ordering::parse(ordering), level);
  });
}

pdm_status pdm_poschl_teller_level_count(double mu, double sigma, const char* ordering,
                                         int* count) {
  if (pdm_status st = require(ordering && count, "pdm_poschl_teller_level_count: null argument"))
    return st;
  return guarded([&] {
    *count = pdm::closedform::poschl_teller_level_count(mu, sigma, pdm::Ordering::parse(ordering));
  });
}

pdm_status pdm_isotonic_energy(double omega, double g, int level, double* e) {
  if (pdm_status st = require(e != nullptr, "pdm_isotonic_energy: null argument")) return st;
  return guarded([&] { *e = pdm::closedform::isotonic_energy(omega, g, level); });
}

pdm_status pdm_singular_energy(double a, double b, double c, const char* ordering, int level,
                               double* e) {
  if (pdm_status st = require(ordering && e, "pdm_singular_energy: null argument")) return st;
  return guarded([&] {
    *e = pdm::closedform::singular_energy(a, b, c, pdm::Ordering::parse(ordering), level);
  });
}

pdm_status pdm_half_power_oscillator_estar(double omega, double g, int level, double* e) {
  if (pdm_status st = require(e != nullptr, "pdm_half_power_oscillator_estar: null argument"))
    return st;
  return guarded([&] { *e = pdm::closedform::half_power_oscillator_estar(omega, g, level); });
}

pdm_status pdm_wavefunction_write_csv(const pdm_model* model, const char* ordering, double e,
                                      double normalization_r, double zmin, double zmax, int points,
                                      const char* path) {
  if (pdm_status st =
          require(model && ordering && path, "pdm_wavefunction_write_csv: null argument"))
    return st;
  if (pdm_status st = require(points >= 2 && zmin < zmax,
                              "pdm_wavefunction_write_csv: bad sampling window"))
    return st;
  return guarded([&] {
    const auto ord = pdm::Ordering::parse(ordering);
    const auto wf = pdm::analytic::wavefunction(model->model, ord, e, normalization_r);
    std::vector<pdm::io::WavefunctionSample> samples(points);
    const double step = (zmax - zmin) / (points - 1);
    for (int i = 0; i < points; ++i) {
      const double z = zmin + step * i;
      samples[i] = {z, wf.value(z)};
    }
    pdm::io::write_file(path, pdm::io::wavefunction_to_csv(samples));
  });
}

double pdm_kinetic_constant_ev_nm2(void) { return pdm::units::kinetic_constant_ev_nm2(); }

pdm_status pdm_energy_to_dimensionless(double e_ev, double l0_nm, double* out) {
  if (pdm_status st = require(out != nullptr, "pdm_energy_to_dimensionless: null argument"))
    return st;
  return guarded([&] { *out = pdm::units::energy_to_dimensionless(e_ev, l0_nm); });
}

pdm_status pdm_energy_from_dimensionless(double e, double l0_nm, double* out) {
  if (pdm_status st = require(out != nullptr, "pdm_energy_from_dimensionless: null argument"))
    return st;
  return guarded([&] { *out = pdm::units::energy_from_dimensionless(e, l0_nm); });
}

pdm_status pdm_length_to_dimensionless(double z_nm, double l0_nm, double* out) {
  if (pdm_status st = require(out != nullptr, "pdm_length_to_dimensionless: null argument"))
    return st;
  return guarded([&] { *out = pdm::units::length_to_dimensionless(z_nm, l0_nm); });
}

pdm_status pdm_length_from_dimensionless(double z, double l0_nm, double* out) {
  if (pdm_status st = require(out != nullptr, "pdm_length_from_dimensionless: null argument"))
    return st;
  return guarded([&] { *out = pdm::units::length_from_dimensionless(z, l0_nm); });
}

pdm_status pdm_model_parabolic_double_physical(double a_nm, double b_nm, double c_nm, double d_nm,
                                               double v0_ev, double m0, double m1, double l0_nm,
                                               pdm_model** out) {
  if (pdm_status st = require(out != nullptr, "pdm_model_parabolic_double_physical: null argument"))
    return st;
  *out = nullptr;
  return guarded([&] {
    const pdm::ParabolicDouble phys{a_nm, b_nm, c_nm, d_nm, v0_ev, m0, m1};
    const pdm::ParabolicDouble dimless = pdm::units::parabolic_to_dimensionless(phys, l0_nm);
    *out = new pdm_model{pdm::build_model(pdm::ProfileFamily{dimless}, dimless.b, dimless.d)};
  });
}

}  // extern "C"
