/*
 * pdmspectra — bound-state spectra of 1D double heterostructures with
 * position-dependent effective mass under multiple kinetic-energy-operator
 * orderings.
 *
 * All quantities are dimensionless: energies in units of hbar^2/(2 M0),
 * masses relative to M0, unless converted through the pdm_*_dimensionless
 * helpers. Orderings are passed by name: "bdd", "zk", "lk", "gw", "tl",
 * or "vr:<alpha>" for the symmetric von Roos family.
 *
 * Every fallible function returns a pdm_status; on failure,
 * pdm_last_error() gives a thread-local description of what went wrong.
 */

#ifndef PDMSPECTRA_H
#define PDMSPECTRA_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pdm_status {
  PDM_OK = 0,
  PDM_ERR_INVALID_ARGUMENT = 1,
  PDM_ERR_UNSUPPORTED_MATCHING = 2,
  PDM_ERR_UNSUPPORTED_ANALYTIC = 3,
  PDM_ERR_NO_BOUND_STATE = 4,
  PDM_ERR_CONDITION_VIOLATED = 5,
  PDM_ERR_DOMAIN = 6,
  PDM_ERR_NON_CONVERGENCE = 7,
  PDM_ERR_NUMERICAL_INCONSISTENCY = 8,
  PDM_ERR_SINGULAR_INTERFACE = 9,
  PDM_ERR_IO = 10,
  PDM_ERR_UNKNOWN = 99
} pdm_status;

typedef struct pdm_model pdm_model;
typedef struct pdm_spectrum pdm_spectrum;
typedef struct pdm_scan pdm_scan;

const char* pdm_version(void);
const char* pdm_last_error(void);

/* ---- model construction -------------------------------------------- */

pdm_status pdm_model_symmetric(double mu, double sigma, double z0, double z1, pdm_model** out);
pdm_status pdm_model_gaussian_mass(double mu, double sigma, double z0, double z1, pdm_model** out);
pdm_status pdm_model_gaussian_mass_delta(double mu, double sigma, double delta, double z0,
                                         double z1, pdm_model** out);
pdm_status pdm_model_gaussian_potential(double mu, double sigma, double z0, double z1,
                                        pdm_model** out);
pdm_status pdm_model_gaussian_potential_delta(double mu, double sigma, double delta, double z0,
                                              double z1, pdm_model** out);
pdm_status pdm_model_morse(double v0, double m0, double sigma, double z0, double z1,
                           pdm_model** out);
pdm_status pdm_model_hyperbolic_mass(double tau, double v0, double m0, double sigma, double z0,
                                     double z1, pdm_model** out);
/* Junctions are fixed at z0=b, z1=d. */
pdm_status pdm_model_parabolic_double(double a, double b, double c, double d, double v0, double m0,
                                      double m1, pdm_model** out);
pdm_status pdm_model_exponential(double vc, double mu0, double c, double lambda, double z0,
                                 double z1, pdm_model** out);
pdm_status pdm_model_singular_parabolic_mass(double a, double b, double c, double z0, double z1,
                                             pdm_model** out);
/* n_steps interfaces at z[i], with region values (v_right[i], m_right[i])
 * to the right of each; (v_left, m_left) fills the left outer region. */
pdm_status pdm_model_explicit_steps(double v_left, double m_left, const double* z,
                                    const double* v_right, const double* m_right, size_t n_steps,
                                    pdm_model** out);
void pdm_model_free(pdm_model* model);

pdm_status pdm_model_eval(const pdm_model* model, double z, double* v, double* m);
pdm_status pdm_model_bounds(const pdm_model* model, double* z0, double* z1, double* v0, double* m0,
                            double* v2, double* m2);

/* ---- orderings ------------------------------------------------------ */

pdm_status pdm_ordering_nu_eta(const char* ordering, double* nu, double* eta);
pdm_status pdm_ordering_can_match(const char* ordering, int* can_match);
pdm_status pdm_ordering_boundary_coeffs(const char* ordering, double m_left, double m_right,
                                        double* mu, double* rho);
pdm_status pdm_g_exponential(const char* ordering, double* g);
pdm_status pdm_g_singular(const char* ordering, double a, double* g);
/* 0 = non-isotonic (g < -1/2), 1 = isotonic with g < 0, 2 = isotonic g >= 0 */
pdm_status pdm_classify_isotonic(double g, int* cls);

/* ---- spectra --------------------------------------------------------- */

/* Bound states as poles of the reflection coefficient of the n-cell
 * discretized structure. The window must satisfy emax <= min(V0, V2). */
pdm_status pdm_find_poles(const pdm_model* model, const char* ordering, int n, double emin,
                          double emax, double tol, pdm_spectrum** out);
/* Bound states as roots of the 2x2 matching determinant (bdd/zk only,
 * analytically solvable families only). */
pdm_status pdm_solve_transcendental(const pdm_model* model, const char* ordering, double emin,
                                    double emax, double tol, pdm_spectrum** out);

size_t pdm_spectrum_size(const pdm_spectrum* s);
pdm_status pdm_spectrum_energies(const pdm_spectrum* s, double* buf, size_t buflen);
pdm_status pdm_spectrum_residuals(const pdm_spectrum* s, double* buf, size_t buflen);
const char* pdm_spectrum_method(const pdm_spectrum* s);
pdm_status pdm_spectrum_write_json(const pdm_spectrum* s, const char* path);
/* Copies the JSON into buf (NUL-terminated); *needed gets the full size
 * including the terminator regardless of buflen. */
pdm_status pdm_spectrum_to_json(const pdm_spectrum* s, char* buf, size_t buflen, size_t* needed);
void pdm_spectrum_free(pdm_spectrum* s);

pdm_status pdm_scan_reflection(const pdm_model* model, const char* ordering, int n, double emin,
                               double emax, int points, pdm_scan** out);
size_t pdm_scan_size(const pdm_scan* s);
pdm_status pdm_scan_point(const pdm_scan* s, size_t i, double* e, double* rc);
pdm_status pdm_scan_write_csv(const pdm_scan* s, const char* path);
void pdm_scan_free(pdm_scan* s);

/* ---- closed-form reference spectra ----------------------------------- */

pdm_status pdm_poschl_teller_energy(double mu, double sigma, const char* ordering, int level,
                                    double* e);
pdm_status pdm_poschl_teller_level_count(double mu, double sigma, const char* ordering,
                                         int* count);
pdm_status pdm_isotonic_energy(double omega, double g, int level, double* e);
pdm_status pdm_singular_energy(double a, double b, double c, const char* ordering, int level,
                               double* e);
pdm_status pdm_half_power_oscillator_estar(double omega, double g, int level, double* e);

/* ---- wave function ---------------------------------------------------- */

/* Samples the bound-state wave function at `e` (a transcendental root) on
 * [zmin, zmax] and writes CSV "z,Re_psi,Im_psi". */
pdm_status pdm_wavefunction_write_csv(const pdm_model* model, const char* ordering, double e,
                                      double normalization_r, double zmin, double zmax, int points,
                                      const char* path);

/* ---- unit conversion --------------------------------------------------- */

double pdm_kinetic_constant_ev_nm2(void);
pdm_status pdm_energy_to_dimensionless(double e_ev, double l0_nm, double* out);
pdm_status pdm_energy_from_dimensionless(double e, double l0_nm, double* out);
pdm_status pdm_length_to_dimensionless(double z_nm, double l0_nm, double* out);
pdm_status pdm_length_from_dimensionless(double z, double l0_nm, double* out);
/* Double-parabolic model in eV/nm/m_e units, mapped to dimensionless form. */
pdm_status pdm_model_parabolic_double_physical(double a_nm, double b_nm, double c_nm, double d_nm,
                                               double v0_ev, double m0, double m1, double l0_nm,
                                               pdm_model** out);

#ifdef __cplusplus
}
#endif

#endif /* PDMSPECTRA_H */
