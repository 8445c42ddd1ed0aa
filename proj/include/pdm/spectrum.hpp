#pragma once

#include <string>
#include <vector>

namespace pdm {

enum class Method { multi_step_poles, transcendental, closed_form };

std::string method_name(Method m);

// Bound energies in ascending order plus per-level refinement residuals.
struct SpectrumResult {
  std::vector<double> energies;
  std::vector<double> residuals;
  Method method = Method::multi_step_poles;
  std::string ordering;
  int n = 0;        // inner-cell count of the grid the result came from (0 for analytic)
  double tol = 0.0;
  std::vector<std::string> diagnostics;  // per-level refinement warnings, normally empty
};

// |R(E)|^2 sampled on a uniform energy grid; values may be inf at poles.
struct ScanResult {
  std::vector<double> energies;
  std::vector<double> values;
  int grid_n = 0;
  std::string ordering;
};

}  // namespace pdm
