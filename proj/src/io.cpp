#include "pdm/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

#include "pdm/errors.hpp"

namespace pdm::io {

std::string format_number(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::isnan(v)) return "nan";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

std::string spectrum_to_json(const SpectrumResult& result) {
  std::string out = "{\n";
  out += "  \"method\": \"" + method_name(result.method) + "\",\n";
  out += "  \"ordering\": \"" + result.ordering + "\",\n";
  out += "  \"n\": " + std::to_string(result.n) + ",\n";
  out += "  \"tol\": " + format_number(result.tol) + ",\n";
  out += "  \"status\": \"" + std::string(result.energies.empty() ? "empty" : "ok") + "\",\n";
  out += "  \"energies\": [";
  for (std::size_t i = 0; i < result.energies.size(); ++i) {
    if (i) out += ", ";
    out += format_number(result.energies[i]);
  }
  out += "],\n  \"residuals\": [";
  for (std::size_t i = 0; i < result.residuals.size(); ++i) {
    if (i) out += ", ";
    out += format_number(result.residuals[i]);
  }
  out += "]";
  if (!result.diagnostics.empty()) {
    out += ",\n  \"diagnostics\": [";
    for (std::size_t i = 0; i < result.diagnostics.size(); ++i) {
      if (i) out += ", ";
      out += "\"" + result.diagnostics[i] + "\"";
    }
    out += "]";
  }
  out += "\n}\n";
  return out;
}

std::string scan_to_csv(const ScanResult& result) {
  std::string out = "E,Rc\n";
  for (std::size_t i = 0; i < result.energies.size(); ++i)
    out += format_number(result.energies[i]) + "," + format_number(result.values[i]) + "\n";
  return out;
}

std::string wavefunction_to_csv(const std::vector<WavefunctionSample>& samples) {
  std::string out = "z,Re_psi,Im_psi\n";
  for (const auto& s : samples)
    out += format_number(s.z) + "," + format_number(s.psi.real()) + "," +
           format_number(s.psi.imag()) + "\n";
  return out;
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream f(path, std::ios::binary);
  if (!f) raise(errc::io_error, "cannot open '" + path + "' for writing");
  f << contents;
  if (!f) raise(errc::io_error, "write to '" + path + "' failed");
}

}  // namespace pdm::io
