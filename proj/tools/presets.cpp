#include "presets.hpp"

namespace cli {

namespace {

pdm_status build_symmetric(double, pdm_model** out) {
  return pdm_model_symmetric(3.0, 4.0, -2.0, 2.0, out);
}
pdm_status build_gauss_mass(double, pdm_model** out) {
  return pdm_model_gaussian_mass(3.0, 4.0, -2.0, 2.0, out);
}
pdm_status build_gauss_mass_7(double, pdm_model** out) {
  return pdm_model_gaussian_mass_delta(3.0, 4.0, 7.0, -2.0, 2.0, out);
}
pdm_status build_gauss_mass_70(double, pdm_model** out) {
  return pdm_model_gaussian_mass_delta(3.0, 4.0, 70.0, -2.0, 2.0, out);
}
pdm_status build_gauss_pot(double, pdm_model** out) {
  return pdm_model_gaussian_potential(3.0, 4.0, -2.0, 2.0, out);
}
pdm_status build_gauss_pot_1(double, pdm_model** out) {
  return pdm_model_gaussian_potential_delta(3.0, 4.0, 1.0, -2.0, 2.0, out);
}
pdm_status build_gauss_pot_7(double, pdm_model** out) {
  return pdm_model_gaussian_potential_delta(3.0, 4.0, 7.0, -2.0, 2.0, out);
}
pdm_status build_morse(double, pdm_model** out) {
  return pdm_model_morse(10.0, 2.0, 2.0, -0.8, 0.8, out);
}
pdm_status build_hyper_05(double, pdm_model** out) {
  return pdm_model_hyperbolic_mass(0.5, 10.0, 2.0, 2.0, -0.8, 0.8, out);
}
pdm_status build_hyper_275(double, pdm_model** out) {
  return pdm_model_hyperbolic_mass(2.75, 10.0, 2.0, 2.0, -0.8, 0.8, out);
}
pdm_status build_hyper_7(double, pdm_model** out) {
  return pdm_model_hyperbolic_mass(7.0, 10.0, 2.0, 2.0, -0.8, 0.8, out);
}
pdm_status build_parabolic(double l0_nm, pdm_model** out) {
  return pdm_model_parabolic_double_physical(9.4, 11.0, 25.0, 31.0, 0.3, 0.0960, 0.0655, l0_nm,
                                             out);
}
pdm_status build_exponential(double, pdm_model** out) {
  return pdm_model_exponential(3.0, 0.5, 1.0, 1.0, -2.0, 2.0, out);
}
pdm_status build_singular(double, pdm_model** out) {
  return pdm_model_singular_parabolic_mass(2.0, -10.0, 1.0, 0.1, 4.0, out);
}

std::vector<TablePreset> make_tables() {
  std::vector<TablePreset> t;

  {
    TablePreset p;
    p.id = "T1";
    p.title = "Symmetric double heterostructure";
    p.rows = {{"ms", "V_s, m_s (mu=3, sigma=4)", build_symmetric}};
    p.window_lo = -10.0;
    p.window_hi = -1.805;
    p.tolerance = 1e-3;
    p.references = {
        {"ms", "bdd", "transcendental",
         {-8.25, -6.875, -5.625, -4.50009, -3.5013, -2.63724, -1.96428}},
        {"ms", "bdd", "poles", {-8.25, -6.875, -5.625, -4.50009, -3.5013, -2.63724, -1.96428}},
        {"ms", "bdd", "closedform", {-8.25, -6.875, -5.625, -4.5, -3.5, -2.625, -1.875}},
        {"ms", "zk", "transcendental",
         {-8.3099, -6.9297, -5.6745, -4.54428, -3.53899, -2.66042, -1.94466}},
        {"ms", "zk", "poles",
         {-8.3099, -6.9297, -5.6745, -4.54428, -3.53899, -2.66042, -1.94466}},
        {"ms", "zk", "closedform",
         {-8.3099, -6.9297, -5.6745, -4.54430, -3.539103, -2.65890, -1.90370}},
        {"ms", "tl", "poles",
         {-8.29051, -6.9132, -5.66088, -4.53358, -3.53155, -2.65848, -1.95561}},
        {"ms", "tl", "closedform",
         {-8.29167, -6.91667, -5.66667, -4.54167, -3.54167, -2.66667, -1.91667}},
    };
    t.push_back(std::move(p));
  }

  {
    TablePreset p;
    p.id = "T2";
    p.title = "Symmetric potential with Gaussian-type mass profiles";
    p.rows = {{"mg", "m_g(z)", build_gauss_mass},
              {"ms", "m_s(z)", build_symmetric},
              {"mg:7", "m_g(7,z)", build_gauss_mass_7},
              {"mg:70", "m_g(70,z)", build_gauss_mass_70}};
    p.window_lo = -10.0;
    p.window_hi = -1.805;
    p.references = {
        {"mg", "bdd", "poles",
         {-8.27528, -6.92737, -5.727, -4.66314, -3.72403, -2.9007, -2.20866}},
        {"ms", "bdd", "poles", {-8.25, -6.875, -5.625, -4.50009, -3.5013, -2.63724, -1.96428}},
        {"mg:7", "bdd", "poles", {-8.01692, -6.47117, -5.00746, -3.52209, -2.28029}},
        {"mg:70", "bdd", "poles", {-7.57495, -6.13984, -3.45826, -2.56635}},
        {"mg", "zk", "poles",
         {-8.30142, -6.95596, -5.75918, -4.70081, -3.76994, -2.95444, -2.24512}},
        {"ms", "zk", "poles",
         {-8.3099, -6.9297, -5.6745, -4.54428, -3.53899, -2.66042, -1.94466}},
        {"mg:7", "zk", "poles", {-8.37197, -6.63962, -4.83016, -3.36362, -2.32209}},
        {"mg:70", "zk", "poles", {-8.26032, -5.19903, -4.0049, -2.2545}},
        {"mg", "tl", "poles",
         {-8.29282, -6.94682, -5.74927, -4.68975, -3.7573, -2.94111, -2.23907}},
        {"ms", "tl", "poles",
         {-8.29051, -6.9132, -5.66088, -4.53358, -3.53155, -2.65848, -1.95561}},
        {"mg:7", "tl", "poles", {-8.27014, -6.6162, -4.9169, -3.43401, -2.31913}},
        {"mg:70", "tl", "poles", {-8.04052, -5.53761, -3.87688, -2.40156}},
    };
    t.push_back(std::move(p));
  }

  {
    TablePreset p;
    p.id = "T3";
    p.title = "Symmetric mass with Gaussian-type potential profiles";
    p.rows = {{"vg", "V_g(z)", build_gauss_pot},
              {"vg:1", "V_g(1,z)", build_gauss_pot_1},
              {"vs", "V_s(z)", build_symmetric},
              {"vg:7", "V_g(7,z)", build_gauss_pot_7}};
    p.window_lo = -10.3;
    p.window_hi = -1.805;
    p.references = {
        {"vg", "bdd", "poles",
         {-8.48885, -7.52102, -6.5416, -5.55965, -4.58509, -3.63137, -2.72542, -1.95856}},
        {"vg:1", "bdd", "poles",
         {-8.30802, -7.00905, -5.76342, -4.59031, -3.51713, -2.59422, -1.97481}},
        {"vs", "bdd", "poles", {-8.25, -6.875, -5.625, -4.50009, -3.5013, -2.63724, -1.96428}},
        {"vg:7", "bdd", "poles", {-7.34722, -4.45967, -2.41175}},
        {"vg", "zk", "poles",
         {-8.54777, -7.57359, -6.58914, -5.60293, -4.62408, -3.66359, -2.74035, -1.93135}},
        {"vg:1", "zk", "poles",
         {-8.36777, -7.06359, -5.81314, -4.63529, -3.55622, -2.61807, -1.95067}},
        {"vs", "zk", "poles",
         {-8.3099, -6.9297, -5.6745, -4.54428, -3.53899, -2.66042, -1.94466}},
        {"vg:7", "zk", "poles", {-7.40843, -4.51762, -2.46253}},
        {"vg", "tl", "poles",
         {-8.52892, -7.55827, -6.57661, -5.59274, -4.61611, -3.65847, -2.74106, -1.94436}},
        {"vg:1", "tl", "poles",
         {-8.34846, -7.04718, -5.7994, -4.62416, -3.5481, -2.61575, -1.9613}},
        {"vs", "tl", "poles",
         {-8.29051, -6.9132, -5.66088, -4.53358, -3.53155, -2.65848, -1.95561}},
        {"vg:7", "tl", "poles", {-7.38831, -4.4993, -2.4482}},
    };
    t.push_back(std::move(p));
  }

  {
    TablePreset p;
    p.id = "T4";
    p.title = "Morse-like double heterostructure";
    p.rows = {{"morse", "V_m, m_m (v0=10, m0=2, sigma=2)", build_morse}};
    p.window_lo = -9.8;
    p.window_hi = 0.0;  // clamped at min(V0, V2)
    p.tolerance = 1e-3;
    p.references = {
        {"morse", "bdd", "transcendental", {-7.74229, -5.40587, -3.99419}},
        {"morse", "bdd", "poles", {-7.74229, -5.40587, -3.99419}},
        {"morse", "zk", "transcendental", {-8.08993, -5.60758, -4.12556}},
        {"morse", "zk", "poles", {-8.08993, -5.60758, -4.12556}},
        {"morse", "tl", "poles", {-8.04977, -5.5844, -4.10875}},
    };
    t.push_back(std::move(p));
  }

  {
    TablePreset p;
    p.id = "T5";
    p.title = "Morse-like potential with hyperbolic mass profiles";
    p.rows = {{"mh:0.5", "m_h(0.5,z)", build_hyper_05},
              {"morse", "m_m(z)", build_morse},
              {"mh:2.75", "m_h(2.75,z)", build_hyper_275},
              {"mh:7", "m_h(7,z)", build_hyper_7}};
    p.window_lo = -9.8;
    p.window_hi = 0.0;
    p.references = {
        {"mh:0.5", "bdd", "poles",
         {-8.07565, -6.96429, -5.9702, -5.08382, -4.29792, -3.65763}},
        {"morse", "bdd", "poles", {-7.74229, -5.40587, -3.99419}},
        {"mh:2.75", "bdd", "poles", {-7.15447, -4.99484, -3.7632}},
        {"mh:7", "bdd", "poles", {-3.69866}},
        {"mh:0.5", "zk", "poles",
         {-8.09038, -6.97779, -5.98252, -5.09502, -4.30839, -3.66699}},
        {"morse", "zk", "poles", {-8.08993, -5.60758, -4.12556}},
        {"mh:2.75", "zk", "poles", {-7.76532, -5.29044, -3.93178}},
        {"mh:7", "zk", "poles", {-4.21368}},
        {"mh:0.5", "tl", "poles",
         {-8.08676, -6.977447, -5.97948, -5.09226, -4.30576, -3.66431}},
        {"morse", "tl", "poles", {-8.04977, -5.5844, -4.10875}},
        {"mh:2.75", "tl", "poles", {-7.70847, -5.2647, -3.9123}},
        {"mh:7", "tl", "poles", {-4.4308}},
    };
    t.push_back(std::move(p));
  }

  {
    TablePreset p;
    p.id = "T6";
    p.title = "Asymmetric double parabolic quantum well (meV)";
    p.rows = {{"parabolic", "V_p, m_p (a=9.4, b=11, c=25, d=31 nm)", build_parabolic}};
    p.physical = true;
    p.window_lo = 40.0;   // meV
    p.window_hi = 190.0;  // meV
    p.tolerance = 0.2;    // meV
    p.references = {
        {"parabolic", "bdd", "poles", {50.5284, 117.34107, 156.51738}},
        {"parabolic", "zk", "poles", {54.1197, 130.65338, 160.38424}},
        {"parabolic", "tl", "poles", {52.8956, 126.1985, 158.91771}},
    };
    t.push_back(std::move(p));
  }

  {
    TablePreset p;
    p.id = "T7";
    p.title = "Exponential potential and mass profiles";
    p.rows = {{"exp", "V_c e^{cz}, mu_0 e^{cz} (vc=3, mu0=1/2, c=1, lambda=1)",
               build_exponential}};
    p.window_lo = 0.5;
    p.window_hi = 21.9;
    p.tolerance = 2e-3;
    p.references = {
        {"exp", "bdd", "transcendental", {5.13516, 10.1865, 15.1575, 19.9185}},
        {"exp", "bdd", "poles", {5.13456, 10.1856, 15.1565, 19.9177}},
        {"exp", "zk", "transcendental", {4.63268, 10.0389, 15.223, 20.076}},
        {"exp", "zk", "poles", {4.6323, 10.0384, 15.2222, 20.0753}},
        {"exp", "tl", "poles", {4.63027, 9.9751, 15.119, 19.965}},
    };
    t.push_back(std::move(p));
  }

  {
    TablePreset p;
    p.id = "T8";
    p.title = "Singular potential with parabolic mass";
    p.rows = {{"singular", "A=2, B=-10, c=1", build_singular}};
    p.window_lo = -19.3;
    p.window_hi = -1.3;  // clamped at min(V0, V2)
    p.tolerance = 1e-3;
    p.references = {
        {"singular", "bdd", "transcendental", {-10.68215, -3.90650, -2.00662}},
        {"singular", "bdd", "poles", {-10.6822, -3.90651, -2.00662}},
        {"singular", "bdd", "closedform", {-10.6688, -3.9033, -2.00539}},
        {"singular", "zk", "transcendental", {-16.05884, -4.94871, -2.370368}},
        {"singular", "zk", "poles", {-16.05698, -4.94871, -2.37037}},
        {"singular", "zk", "closedform", {-16.0, -4.93827, -2.36686}},
        {"singular", "tl", "poles", {-14.38634, -4.65256, -2.27083}},
    };
    t.push_back(std::move(p));
  }

  return t;
}

}  // namespace

const std::vector<TablePreset>& tables() {
  static const std::vector<TablePreset> t = make_tables();
  return t;
}

const TablePreset* find_table(const std::string& id) {
  for (const auto& t : tables())
    if (t.id == id) return &t;
  return nullptr;
}

const RowSpec* find_row(const TablePreset& table, const std::string& row_id) {
  if (row_id.empty()) return table.rows.empty() ? nullptr : &table.rows.front();
  for (const auto& r : table.rows)
    if (r.id == row_id) return &r;
  return nullptr;
}

}  // namespace cli
