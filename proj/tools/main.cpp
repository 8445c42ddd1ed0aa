// pdm-spectra: bound-state spectra of 1D position-dependent-mass double
// heterostructures under different kinetic-energy-operator orderings.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "config.hpp"
#include "pdmspectra.h"
#include "presets.hpp"

namespace {

struct CliError {
  int exit_code;
  std::string category;
  std::string message;
};

[[noreturn]] void fail(int exit_code, const std::string& category, const std::string& message) {
  throw CliError{exit_code, category, message};
}

void check(pdm_status st, const std::string& what) {
  if (st == PDM_OK) return;
  std::string category;
  switch (st) {
    case PDM_ERR_INVALID_ARGUMENT: category = "invalid-argument"; break;
    case PDM_ERR_UNSUPPORTED_MATCHING: category = "unsupported-matching"; break;
    case PDM_ERR_UNSUPPORTED_ANALYTIC: category = "unsupported-analytic"; break;
    case PDM_ERR_NO_BOUND_STATE: category = "no-bound-state"; break;
    case PDM_ERR_CONDITION_VIOLATED: category = "condition-violated"; break;
    case PDM_ERR_DOMAIN: category = "domain-error"; break;
    case PDM_ERR_NON_CONVERGENCE: category = "non-convergence"; break;
    case PDM_ERR_NUMERICAL_INCONSISTENCY: category = "numerical-inconsistency"; break;
    case PDM_ERR_SINGULAR_INTERFACE: category = "singular-interface"; break;
    case PDM_ERR_IO: category = "io-error"; break;
    default: category = "error"; break;
  }
  fail(3, category, what + ": " + pdm_last_error());
}

std::string num(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

struct ModelHandle {
  pdm_model* ptr = nullptr;
  ~ModelHandle() { pdm_model_free(ptr); }
};

struct SpectrumHandle {
  pdm_spectrum* ptr = nullptr;
  ~SpectrumHandle() { pdm_spectrum_free(ptr); }
};

struct ScanHandle {
  pdm_scan* ptr = nullptr;
  ~ScanHandle() { pdm_scan_free(ptr); }
};

// Options shared by the model-consuming subcommands.
struct ModelOptions {
  std::string table;
  std::string row;
  std::string config_path;
  double l0_nm = 1.0;
};

struct ResolvedModel {
  ModelHandle model;
  const cli::TablePreset* preset = nullptr;  // set when --table was used
  bool physical = false;                     // energies reported in meV
  double l0_nm = 1.0;
};

void add_model_options(CLI::App* cmd, ModelOptions* opts) {
  cmd->add_option("--table,-t", opts->table, "built-in model preset (T1..T8)");
  cmd->add_option("--row", opts->row, "profile row of the preset (e.g. mg:7)");
  cmd->add_option("--config,-c", opts->config_path, "run configuration file");
  cmd->add_option("--l0", opts->l0_nm, "length scale in nm for physical-unit models");
}

pdm_status build_from_config(const cli::Config& cfg, double l0_nm, pdm_model** out,
                             bool* physical) {
  const auto family = cfg.get("model.family");
  if (!family) fail(2, "config-error", "missing model.family");
  auto want = [&](const char* key) {
    const auto v = cfg.get_number(std::string("model.") + key);
    if (!v) fail(2, "config-error", std::string("missing model.") + key);
    return *v;
  };
  *physical = false;
  if (*family == "symmetric")
    return pdm_model_symmetric(want("mu"), want("sigma"), want("z0"), want("z1"), out);
  if (*family == "gaussian_mass")
    return pdm_model_gaussian_mass(want("mu"), want("sigma"), want("z0"), want("z1"), out);
  if (*family == "gaussian_mass_delta")
    return pdm_model_gaussian_mass_delta(want("mu"), want("sigma"), want("delta"), want("z0"),
                                         want("z1"), out);
  if (*family == "gaussian_potential")
    return pdm_model_gaussian_potential(want("mu"), want("sigma"), want("z0"), want("z1"), out);
  if (*family == "gaussian_potential_delta")
    return pdm_model_gaussian_potential_delta(want("mu"), want("sigma"), want("delta"),
                                              want("z0"), want("z1"), out);
  if (*family == "morse")
    return pdm_model_morse(want("v0"), want("m0"), want("sigma"), want("z0"), want("z1"), out);
  if (*family == "hyperbolic_mass")
    return pdm_model_hyperbolic_mass(want("tau"), want("v0"), want("m0"), want("sigma"),
                                     want("z0"), want("z1"), out);
  if (*family == "parabolic_double") {
    const auto units = cfg.get("model.units");
    if (units && *units == "physical") {
      *physical = true;
      const double l0 = cfg.get_number("model.l0_nm").value_or(l0_nm);
      return pdm_model_parabolic_double_physical(want("a"), want("b"), want("c"), want("d"),
                                                 want("v0"), want("m0"), want("m1"), l0, out);
    }
    return pdm_model_parabolic_double(want("a"), want("b"), want("c"), want("d"), want("v0"),
                                      want("m0"), want("m1"), out);
  }
  if (*family == "exponential")
    return pdm_model_exponential(want("vc"), want("mu0"), want("c"), want("lambda"), want("z0"),
                                 want("z1"), out);
  if (*family == "singular_parabolic_mass")
    return pdm_model_singular_parabolic_mass(want("a"), want("b"), want("c"), want("z0"),
                                             want("z1"), out);
  if (*family == "explicit_steps") {
    const auto steps = cfg.get("model.steps");
    if (!steps) fail(2, "config-error", "missing model.steps (\"z v m; z v m; ...\")");
    std::vector<double> z, v, m;
    std::istringstream in(*steps);
    std::string chunk;
    while (std::getline(in, chunk, ';')) {
      std::istringstream fields(chunk);
      double zz, vv, mm;
      if (!(fields >> zz >> vv >> mm))
        fail(2, "config-error", "malformed model.steps entry '" + chunk + "'");
      z.push_back(zz);
      v.push_back(vv);
      m.push_back(mm);
    }
    return pdm_model_explicit_steps(want("v_left"), want("m_left"), z.data(), v.data(), m.data(),
                                    z.size(), out);
  }
  fail(2, "config-error", "unknown model.family '" + *family + "'");
}

ResolvedModel resolve_model(const ModelOptions& opts, const cli::Config* cfg) {
  ResolvedModel out;
  out.l0_nm = opts.l0_nm;
  if (!opts.table.empty()) {
    const auto* preset = cli::find_table(opts.table);
    if (!preset) fail(2, "usage", "unknown table '" + opts.table + "' (expected T1..T8)");
    const auto* row = cli::find_row(*preset, opts.row);
    if (!row) fail(2, "usage", "unknown row '" + opts.row + "' for table " + preset->id);
    check(row->build(opts.l0_nm, &out.model.ptr), "building model " + preset->id);
    out.preset = preset;
    out.physical = preset->physical;
    return out;
  }
  if (cfg) {
    check(build_from_config(*cfg, opts.l0_nm, &out.model.ptr, &out.physical),
          "building model from config");
    if (out.physical) {
      const auto l0 = cfg->get_number("model.l0_nm");
      if (l0) out.l0_nm = *l0;
    }
    return out;
  }
  fail(2, "usage", "no model given: use --table or --config");
}

double to_internal_energy(const ResolvedModel& m, double e) {
  if (!m.physical) return e;
  double out = 0.0;
  check(pdm_energy_to_dimensionless(e / 1000.0, m.l0_nm, &out), "unit conversion");
  return out;
}

double to_report_energy(const ResolvedModel& m, double e) {
  if (!m.physical) return e;
  double out = 0.0;
  check(pdm_energy_from_dimensionless(e, m.l0_nm, &out), "unit conversion");
  return out * 1000.0;
}

// Search window in internal units, clamped below the outer potentials.
void search_window(const ResolvedModel& m, std::optional<double> user_lo,
                   std::optional<double> user_hi, double* lo, double* hi) {
  double z0, z1, v0, m0, v2, m2;
  check(pdm_model_bounds(m.model.ptr, &z0, &z1, &v0, &m0, &v2, &m2), "model bounds");
  const double v_out = std::min(v0, v2);
  const double clamp = v_out - 1e-6 * std::max(1.0, std::abs(v_out));
  double lo_v, hi_v;
  if (user_lo) {
    lo_v = to_internal_energy(m, *user_lo);
  } else if (m.preset) {
    lo_v = to_internal_energy(m, m.preset->window_lo);
  } else {
    fail(2, "usage", "no search window: pass --emin/--emax");
  }
  if (user_hi) {
    hi_v = std::min(to_internal_energy(m, *user_hi), clamp);
  } else if (m.preset) {
    hi_v = std::min(to_internal_energy(m, m.preset->window_hi), clamp);
  } else {
    hi_v = clamp;
  }
  if (!(lo_v < hi_v))
    fail(2, "usage", "empty search window after clamping at min(V0, V2) = " + num(v_out));
  *lo = lo_v;
  *hi = hi_v;
}

std::vector<double> spectrum_energies(const pdm_spectrum* s) {
  std::vector<double> e(pdm_spectrum_size(s));
  if (!e.empty()) check(pdm_spectrum_energies(s, e.data(), e.size()), "reading spectrum");
  return e;
}

void validate_method_ordering(const std::string& method, const std::string& ordering) {
  int can = 0;
  check(pdm_ordering_can_match(ordering.c_str(), &can), "parsing ordering");
  if ((method == "poles" || method == "scan") && !can)
    fail(2, "unsupported-matching",
         "ordering '" + ordering + "' has no junction conditions; the multi-step method "
         "cannot be used with it");
  if (method == "transcendental" && ordering != "bdd" && ordering != "zk")
    fail(2, "unsupported-analytic",
         "the transcendental method is available for the bdd and zk orderings only");
}

// Closed-form reference levels for the preset families, restricted to a window.
std::vector<double> closedform_levels(const ResolvedModel& m, const std::string& ordering,
                                      double lo, double hi) {
  if (!m.preset) fail(2, "usage", "--method closedform requires --table T1, T7 or T8");
  std::vector<double> out;
  auto push_in_window = [&](double e) {
    if (e >= lo && e <= hi) out.push_back(e);
    return e <= hi;
  };
  if (m.preset->id == "T1" || m.preset->id == "T2" || m.preset->id == "T3") {
    int count = 0;
    check(pdm_poschl_teller_level_count(3.0, 4.0, ordering.c_str(), &count), "closed form");
    for (int n = 0; n < count; ++n) {
      double e = 0.0;
      check(pdm_poschl_teller_energy(3.0, 4.0, ordering.c_str(), n, &e), "closed form");
      if (!push_in_window(e)) break;
    }
    return out;
  }
  if (m.preset->id == "T7") {
    double g = 0.0;
    check(pdm_g_exponential(ordering.c_str(), &g), "closed form");
    const double omega = std::sqrt(6.0);  // c^2 vc / mu0 for the preset
    for (int n = 0; n < 64; ++n) {
      double e = 0.0;
      check(pdm_isotonic_energy(omega, g, n, &e), "closed form");
      if (!push_in_window(e)) break;
    }
    return out;
  }
  if (m.preset->id == "T8") {
    for (int n = 0; n < 64; ++n) {
      double e = 0.0;
      check(pdm_singular_energy(2.0, -10.0, 1.0, ordering.c_str(), n, &e), "closed form");
      if (e > hi) break;
      if (e >= lo) out.push_back(e);
    }
    return out;
  }
  fail(2, "usage", "--method closedform is not available for table " + m.preset->id);
}

std::string closedform_json(const std::string& ordering, const std::vector<double>& energies) {
  std::string out = "{\n";
  out += "  \"method\": \"closedform\",\n";
  out += "  \"ordering\": \"" + ordering + "\",\n";
  out += "  \"n\": 0,\n";
  out += "  \"tol\": 0,\n";
  out += "  \"status\": \"" + std::string(energies.empty() ? "empty" : "ok") + "\",\n";
  out += "  \"energies\": [";
  for (std::size_t i = 0; i < energies.size(); ++i) {
    if (i) out += ", ";
    out += num(energies[i]);
  }
  out += "],\n  \"residuals\": [";
  for (std::size_t i = 0; i < energies.size(); ++i) {
    if (i) out += ", ";
    out += "0";
  }
  out += "]\n}\n";
  return out;
}

void write_or_print(const std::string& path, const std::string& contents) {
  if (path.empty()) {
    std::cout << contents;
    return;
  }
  FILE* f = std::fopen(path.c_str(), "wb");
  if (!f) fail(3, "io-error", "cannot open '" + path + "'");
  std::fwrite(contents.data(), 1, contents.size(), f);
  std::fclose(f);
}

std::string render_summary(const ResolvedModel& m, const std::string& method,
                           const std::string& ordering, const std::vector<double>& energies) {
  std::ostringstream os;
  os << "method: " << method << "\nordering: " << ordering << "\n";
  os << "status: " << (energies.empty() ? "empty" : "ok") << "\n";
  for (std::size_t i = 0; i < energies.size(); ++i) {
    os << "E" << i << " = " << num(energies[i]);
    if (m.physical) os << " (" << num(to_report_energy(m, energies[i])) << " meV)";
    os << "\n";
  }
  return os.str();
}

// ---- subcommands -----------------------------------------------------------

struct SpectrumArgs {
  ModelOptions model;
  std::string ordering = "bdd";
  std::string method = "poles";
  int n = 0;
  double tol = 1e-6;
  std::optional<double> emin, emax;
  std::string out;
  std::string format = "json";
};

int run_spectrum(const SpectrumArgs& args) {
  std::optional<cli::Config> cfg;
  if (!args.model.config_path.empty()) cfg = cli::Config::parse_file(args.model.config_path);

  SpectrumArgs a = args;
  if (cfg) {  // config supplies defaults; flags win
    if (auto v = cfg->get("ordering.name"); v && args.ordering == "bdd") a.ordering = *v;
    if (auto v = cfg->get("method.kind"); v && args.method == "poles") a.method = *v;
    if (auto v = cfg->get_number("method.n"); v && args.n == 0) a.n = static_cast<int>(*v);
    if (auto v = cfg->get_number("method.tol")) a.tol = *v;
    if (auto v = cfg->get_number("method.emin"); v && !args.emin) a.emin = *v;
    if (auto v = cfg->get_number("method.emax"); v && !args.emax) a.emax = *v;
    if (auto v = cfg->get("output.path"); v && args.out.empty()) a.out = *v;
    if (auto v = cfg->get("output.format"); v && args.format == "json") a.format = *v;
  }
  validate_method_ordering(a.method, a.ordering);

  ResolvedModel m = resolve_model(a.model, cfg ? &*cfg : nullptr);
  const int n = a.n > 0 ? a.n : (m.preset ? m.preset->default_n : 2000);
  double lo, hi;
  search_window(m, a.emin, a.emax, &lo, &hi);

  std::vector<double> energies;
  std::string json;
  if (a.method == "poles" || a.method == "transcendental") {
    SpectrumHandle spec;
    if (a.method == "poles") {
      check(pdm_find_poles(m.model.ptr, a.ordering.c_str(), n, lo, hi, a.tol, &spec.ptr),
            "pole search");
    } else {
      check(pdm_solve_transcendental(m.model.ptr, a.ordering.c_str(), lo, hi, a.tol, &spec.ptr),
            "transcendental solve");
    }
    energies = spectrum_energies(spec.ptr);
    size_t needed = 0;
    pdm_spectrum_to_json(spec.ptr, nullptr, 0, &needed);
    std::vector<char> buf(needed);
    check(pdm_spectrum_to_json(spec.ptr, buf.data(), buf.size(), &needed), "rendering json");
    json.assign(buf.data());
  } else if (a.method == "closedform") {
    energies = closedform_levels(m, a.ordering, lo, hi);
    json = closedform_json(a.ordering, energies);
  } else {
    fail(2, "usage", "unknown method '" + a.method + "'");
  }

  if (a.format == "json") {
    write_or_print(a.out, json);
  } else if (a.format == "csv") {
    std::string csv = "n,E\n";
    for (std::size_t i = 0; i < energies.size(); ++i)
      csv += std::to_string(i) + "," + num(energies[i]) + "\n";
    write_or_print(a.out, csv);
  } else if (a.format == "md") {
    std::string md = "| n | E |\n|---|---|\n";
    for (std::size_t i = 0; i < energies.size(); ++i)
      md += "| " + std::to_string(i) + " | " + num(energies[i]) + " |\n";
    write_or_print(a.out, md);
  } else {
    fail(2, "usage", "unknown format '" + a.format + "'");
  }
  if (!a.out.empty()) std::cout << render_summary(m, a.method, a.ordering, energies);
  return 0;
}

struct ScanArgs {
  ModelOptions model;
  std::string ordering = "bdd";
  int n = 0;
  int points = 4000;
  std::optional<double> emin, emax;
  std::string out;
};

int run_scan(const ScanArgs& args) {
  std::optional<cli::Config> cfg;
  if (!args.model.config_path.empty()) cfg = cli::Config::parse_file(args.model.config_path);
  validate_method_ordering("scan", args.ordering);
  ResolvedModel m = resolve_model(args.model, cfg ? &*cfg : nullptr);
  const int n = args.n > 0 ? args.n : (m.preset ? m.preset->default_n : 2000);
  double lo, hi;
  if (args.emin && args.emax) {
    lo = to_internal_energy(m, *args.emin);
    hi = to_internal_energy(m, *args.emax);
    if (!(lo < hi)) fail(2, "usage", "need emin < emax");
  } else {
    search_window(m, args.emin, args.emax, &lo, &hi);
  }
  ScanHandle scan;
  check(pdm_scan_reflection(m.model.ptr, args.ordering.c_str(), n, lo, hi, args.points,
                            &scan.ptr),
        "reflection scan");
  if (args.out.empty()) {
    std::string csv = "E,Rc\n";
    for (std::size_t i = 0; i < pdm_scan_size(scan.ptr); ++i) {
      double e, rc;
      check(pdm_scan_point(scan.ptr, i, &e, &rc), "reading scan");
      csv += num(e) + "," + num(rc) + "\n";
    }
    std::cout << csv;
  } else {
    check(pdm_scan_write_csv(scan.ptr, args.out.c_str()), "writing csv");
    std::cout << "wrote " << args.out << " (" << pdm_scan_size(scan.ptr) << " points)\n";
  }
  return 0;
}

struct WavefunctionArgs {
  ModelOptions model;
  std::string ordering = "bdd";
  double energy = 0.0;
  double normalization = 1.0;
  std::optional<double> zmin, zmax;
  int points = 1001;
  std::string out = "wavefunction.csv";
};

int run_wavefunction(const WavefunctionArgs& args) {
  std::optional<cli::Config> cfg;
  if (!args.model.config_path.empty()) cfg = cli::Config::parse_file(args.model.config_path);
  ResolvedModel m = resolve_model(args.model, cfg ? &*cfg : nullptr);
  double z0, z1, v0, m0, v2, m2;
  check(pdm_model_bounds(m.model.ptr, &z0, &z1, &v0, &m0, &v2, &m2), "model bounds");
  const double zmin = args.zmin.value_or(z0 - 0.5 * (z1 - z0));
  const double zmax = args.zmax.value_or(z1 + 0.5 * (z1 - z0));
  const double e = to_internal_energy(m, args.energy);
  check(pdm_wavefunction_write_csv(m.model.ptr, args.ordering.c_str(), e, args.normalization,
                                   zmin, zmax, args.points, args.out.c_str()),
        "wavefunction export");
  std::cout << "wrote " << args.out << "\n";
  return 0;
}

struct CompareArgs {
  ModelOptions model;
  std::string ordering = "bdd";
  int n = 0;
  double tol = 1e-6;
  std::optional<double> emin, emax;
  std::string out;
  std::string format = "md";
};

int run_compare(const CompareArgs& args) {
  std::optional<cli::Config> cfg;
  if (!args.model.config_path.empty()) cfg = cli::Config::parse_file(args.model.config_path);
  validate_method_ordering("transcendental", args.ordering);
  ResolvedModel m = resolve_model(args.model, cfg ? &*cfg : nullptr);
  const int n = args.n > 0 ? args.n : (m.preset ? m.preset->default_n : 2000);
  double lo, hi;
  search_window(m, args.emin, args.emax, &lo, &hi);

  SpectrumHandle trans, poles;
  check(pdm_solve_transcendental(m.model.ptr, args.ordering.c_str(), lo, hi, args.tol,
                                 &trans.ptr),
        "transcendental solve");
  check(pdm_find_poles(m.model.ptr, args.ordering.c_str(), n, lo, hi, args.tol, &poles.ptr),
        "pole search");
  const auto et = spectrum_energies(trans.ptr);
  const auto ep = spectrum_energies(poles.ptr);

  std::ostringstream os;
  double max_diff = 0.0;
  const std::size_t rows = std::max(et.size(), ep.size());
  if (args.format == "md") {
    os << "| n | transcendental | poles | abs diff |\n|---|---|---|---|\n";
  } else {
    os << "n,transcendental,poles,abs_diff\n";
  }
  for (std::size_t i = 0; i < rows; ++i) {
    const bool both = i < et.size() && i < ep.size();
    const double diff = both ? std::abs(et[i] - ep[i]) : 0.0;
    if (both) max_diff = std::max(max_diff, diff);
    const std::string a = i < et.size() ? num(to_report_energy(m, et[i])) : "-";
    const std::string b = i < ep.size() ? num(to_report_energy(m, ep[i])) : "-";
    const std::string d = both ? num(diff) : "-";
    if (args.format == "md") {
      os << "| " << i << " | " << a << " | " << b << " | " << d << " |\n";
    } else {
      os << i << "," << a << "," << b << "," << d << "\n";
    }
  }
  if (args.format == "md") os << "\nmax |diff| = " << num(max_diff) << "\n";
  write_or_print(args.out, os.str());
  if (et.size() != ep.size())
    fail(3, "mismatch", "the two methods found different level counts");
  return 0;
}

struct ReproduceArgs {
  std::string table;
  std::string out_dir;
  int n = 0;
  double tol = 1e-6;
  double l0_nm = 1.0;
};

int run_reproduce(const ReproduceArgs& args) {
  const auto* preset = cli::find_table(args.table);
  if (!preset) fail(2, "usage", "unknown table '" + args.table + "' (expected T1..T8)");
  const int n = args.n > 0 ? args.n : preset->default_n;

  std::ostringstream md, csv;
  md << "# " << preset->id << " - " << preset->title << "\n\n";
  md << "| row | ordering | method | level | computed | reference | abs diff |\n";
  md << "|---|---|---|---|---|---|---|\n";
  csv << "row,ordering,method,level,computed,reference,abs_diff\n";
  double max_diff = 0.0;
  int missing = 0;

  for (const auto& ref : preset->references) {
    const auto* row = cli::find_row(*preset, ref.row);
    if (!row) fail(3, "internal", "preset row missing: " + ref.row);
    ResolvedModel m;
    m.preset = preset;
    m.physical = preset->physical;
    m.l0_nm = args.l0_nm;
    check(row->build(args.l0_nm, &m.model.ptr), "building model " + preset->id);
    double lo, hi;
    search_window(m, std::nullopt, std::nullopt, &lo, &hi);

    std::vector<double> computed;
    if (ref.method == "poles") {
      SpectrumHandle s;
      check(pdm_find_poles(m.model.ptr, ref.ordering.c_str(), n, lo, hi, args.tol, &s.ptr),
            "pole search");
      computed = spectrum_energies(s.ptr);
    } else if (ref.method == "transcendental") {
      SpectrumHandle s;
      check(pdm_solve_transcendental(m.model.ptr, ref.ordering.c_str(), lo, hi, args.tol,
                                     &s.ptr),
            "transcendental solve");
      computed = spectrum_energies(s.ptr);
    } else {
      computed = closedform_levels(m, ref.ordering, lo, hi);
    }
    for (auto& e : computed) e = to_report_energy(m, e);

    for (std::size_t i = 0; i < ref.energies.size(); ++i) {
      const bool have = i < computed.size();
      const double diff = have ? std::abs(computed[i] - ref.energies[i]) : 0.0;
      if (have) max_diff = std::max(max_diff, diff);
      if (!have) ++missing;
      const std::string cv = have ? num(computed[i]) : "-";
      const std::string dv = have ? num(diff) : "-";
      md << "| " << ref.row << " | " << ref.ordering << " | " << ref.method << " | " << i
         << " | " << cv << " | " << num(ref.energies[i]) << " | " << dv << " |\n";
      csv << ref.row << "," << ref.ordering << "," << ref.method << "," << i << "," << cv << ","
          << num(ref.energies[i]) << "," << dv << "\n";
    }
    if (computed.size() > ref.energies.size()) {
      std::ostringstream note;
      note << "extra levels computed for " << ref.row << "/" << ref.ordering << "/"
           << ref.method << ": expected " << ref.energies.size() << ", got " << computed.size();
      fail(3, "mismatch", note.str());
    }
  }

  md << "\nmax abs diff = " << num(max_diff);
  if (preset->physical) md << " meV";
  md << " (report tolerance " << num(preset->tolerance) << ")\n";
  if (missing > 0) md << "missing levels: " << missing << "\n";

  if (!args.out_dir.empty()) {
    write_or_print(args.out_dir + "/" + preset->id + ".md", md.str());
    write_or_print(args.out_dir + "/" + preset->id + ".csv", csv.str());
  }
  std::cout << md.str();
  if (missing > 0) fail(3, "mismatch", "some reference levels were not found");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bound-state spectra of position-dependent-mass double heterostructures"};
  app.require_subcommand(1);
  app.set_version_flag("--version", pdm_version());

  SpectrumArgs spectrum_args;
  auto* spectrum = app.add_subcommand("spectrum", "compute a bound-state spectrum");
  add_model_options(spectrum, &spectrum_args.model);
  spectrum->add_option("--ordering,-o", spectrum_args.ordering,
                       "bdd, zk, lk, gw, tl or vr:<alpha>");
  spectrum->add_option("--method,-m", spectrum_args.method,
                       "poles, transcendental or closedform");
  spectrum->add_option("--n", spectrum_args.n, "inner cells of the step grid");
  spectrum->add_option("--tol", spectrum_args.tol, "refinement tolerance");
  spectrum->add_option("--emin", spectrum_args.emin, "window lower edge");
  spectrum->add_option("--emax", spectrum_args.emax, "window upper edge");
  spectrum->add_option("--out", spectrum_args.out, "artifact path (stdout if omitted)");
  spectrum->add_option("--format", spectrum_args.format, "json, csv or md");

  ScanArgs scan_args;
  auto* scan = app.add_subcommand("scan", "scan the reflection coefficient |R|^2");
  add_model_options(scan, &scan_args.model);
  scan->add_option("--ordering,-o", scan_args.ordering, "ordering name");
  scan->add_option("--n", scan_args.n, "inner cells of the step grid");
  scan->add_option("--points", scan_args.points, "energy samples");
  scan->add_option("--emin", scan_args.emin, "window lower edge");
  scan->add_option("--emax", scan_args.emax, "window upper edge");
  scan->add_option("--out", scan_args.out, "CSV path (stdout if omitted)");

  WavefunctionArgs wf_args;
  auto* wf = app.add_subcommand("wavefunction", "export a bound-state wave function");
  add_model_options(wf, &wf_args.model);
  wf->add_option("--ordering,-o", wf_args.ordering, "bdd or zk");
  wf->add_option("--energy,-e", wf_args.energy, "bound energy (a transcendental root)")
      ->required();
  wf->add_option("--normalization", wf_args.normalization, "left-tail amplitude");
  wf->add_option("--zmin", wf_args.zmin, "sampling start");
  wf->add_option("--zmax", wf_args.zmax, "sampling end");
  wf->add_option("--points", wf_args.points, "sample count");
  wf->add_option("--out", wf_args.out, "CSV path");

  CompareArgs compare_args;
  auto* compare = app.add_subcommand("compare", "transcendental vs pole spectra side by side");
  add_model_options(compare, &compare_args.model);
  compare->add_option("--ordering,-o", compare_args.ordering, "bdd or zk");
  compare->add_option("--n", compare_args.n, "inner cells of the step grid");
  compare->add_option("--tol", compare_args.tol, "refinement tolerance");
  compare->add_option("--emin", compare_args.emin, "window lower edge");
  compare->add_option("--emax", compare_args.emax, "window upper edge");
  compare->add_option("--out", compare_args.out, "report path (stdout if omitted)");
  compare->add_option("--format", compare_args.format, "md or csv");

  ReproduceArgs repro_args;
  auto* repro = app.add_subcommand("reproduce-table",
                                   "recompute a published table and report differences");
  repro->add_option("--table,-t", repro_args.table, "T1..T8")->required();
  repro->add_option("--out-dir", repro_args.out_dir, "directory for <table>.md/.csv");
  repro->add_option("--n", repro_args.n, "inner cells of the step grid");
  repro->add_option("--tol", repro_args.tol, "refinement tolerance");
  repro->add_option("--l0", repro_args.l0_nm, "length scale in nm for physical tables");

  try {
    app.parse(argc, argv);
    if (spectrum->parsed()) return run_spectrum(spectrum_args);
    if (scan->parsed()) return run_scan(scan_args);
    if (wf->parsed()) return run_wavefunction(wf_args);
    if (compare->parsed()) return run_compare(compare_args);
    if (repro->parsed()) return run_reproduce(repro_args);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
    std::cerr << "error: usage: " << e.what() << "\n";
    return 2;
  } catch (const CliError& e) {
    std::cerr << "error: " << e.category << ": " << e.message << "\n";
    return e.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "error: internal: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
