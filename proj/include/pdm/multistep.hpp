#pragma once

#include <complex>

#include "pdm/ordering.hpp"
#include "pdm/profiles.hpp"
#include "pdm/spectrum.hpp"

namespace pdm::multistep {

// k = sqrt(m (E - V)) on the branch Im k >= 0:
// real and non-negative for E >= V, i*sqrt(m (V - E)) for E < V.
std::complex<double> wavenumber(double m, double v, double e);

// Right-to-left recursion over the step grid. Poles of |R|^2 over real E
// are the bound energies; a non-finite result marks a pole hit exactly.
std::complex<double> reflection_amplitude(const StepGrid& grid, const Ordering& ord, double e);

ScanResult scan(const StepGrid& grid, const Ordering& ord, double e_min, double e_max, int points);

struct PoleSearchOptions {
  int scan_points = 4000;         // coarse-scan density over the search window
  double accept_threshold = 1e-4; // keep a minimum only if 1/(1+|R|^2) ends below this
  int max_refine_iters = 200;
};

// Locates poles of |R|^2 in (e_min, e_max) by coarse scan of 1/(1+|R|^2)
// followed by golden-section refinement of each bracketed minimum.
SpectrumResult find_poles(const StepGrid& grid, const Ordering& ord, double e_min, double e_max,
                          double tol, const PoleSearchOptions& opts = {});

}  // namespace pdm::multistep
