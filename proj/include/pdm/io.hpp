#pragma once

#include <complex>
#include <string>
#include <vector>

#include "pdm/spectrum.hpp"

namespace pdm::io {

// Fixed 9-significant-digit formatting so identical inputs produce
// byte-identical artifacts.
std::string format_number(double v);

std::string spectrum_to_json(const SpectrumResult& result);

// CSV with header exactly "E,Rc".
std::string scan_to_csv(const ScanResult& result);

struct WavefunctionSample {
  double z;
  std::complex<double> psi;
};

// CSV with header exactly "z,Re_psi,Im_psi".
std::string wavefunction_to_csv(const std::vector<WavefunctionSample>& samples);

void write_file(const std::string& path, const std::string& contents);

}  // namespace pdm::io
