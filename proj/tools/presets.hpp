#pragma once

// Built-in model presets T1..T8 with their published reference spectra,
// used by --table lookups and the reproduce-table report.

#include <string>
#include <vector>

#include "pdmspectra.h"

namespace cli {

struct RowSpec {
  std::string id;     // e.g. "ms", "mg:7"
  std::string label;  // display label
  // builds the model through the C API; caller owns the handle
  pdm_status (*build)(double l0_nm, pdm_model** out);
};

struct ReferenceSpectrum {
  std::string row;
  std::string ordering;  // "bdd", "zk", "tl"
  std::string method;    // "poles", "transcendental", "closedform"
  std::vector<double> energies;
};

struct TablePreset {
  std::string id;
  std::string title;
  std::vector<RowSpec> rows;
  std::vector<ReferenceSpectrum> references;
  double window_lo;  // default search window (dimensionless; meV for T6)
  double window_hi;  // upper edge before clamping at min(V0, V2)
  bool physical = false;
  int default_n = 4000;
  double tolerance = 2e-3;  // reproduction tolerance for the report
};

const std::vector<TablePreset>& tables();
const TablePreset* find_table(const std::string& id);
const RowSpec* find_row(const TablePreset& table, const std::string& row_id);

}  // namespace cli
