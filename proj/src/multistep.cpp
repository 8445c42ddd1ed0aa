#include "pdm/multistep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <limits>
#include <sstream>
#include <thread>

namespace pdm::multistep {

namespace {

using cd = std::complex<double>;

int thread_budget(int work_items) {
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  int cap = static_cast<int>(hw);
  if (const char* env = std::getenv("PDM_SPECTRA_THREADS")) {
    const int v = std::atoi(env);
    if (v >= 1) cap = std::min(cap, v);
  }
  return std::max(1, std::min(cap, work_items / 64));
}

// Index-addressed parallel map; results land at fixed indices, so the
// assembled output is identical for any thread count.
void parallel_for(int count, const std::function<void(int)>& fn) {
  const int threads = thread_budget(count);
  if (threads <= 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

// Per-(grid, ordering) data that does not depend on energy.
struct RecursionContext {
  const StepGrid* grid;
  std::vector<MatchCoeffs> coeffs;  // one per interface
  std::vector<double> widths;       // widths[j] = width of region j (1..N-1)

  RecursionContext(const StepGrid& g, const Ordering& ord) : grid(&g) {
    const int n = g.n_interfaces();
    if (n < 1) raise(errc::invalid_argument, "reflection_amplitude: grid has no interfaces");
    if (static_cast<int>(g.regions.size()) != n + 1)
      raise(errc::invalid_argument, "reflection_amplitude: region/interface count mismatch");
    if (!ord.can_match())
      raise(errc::unsupported_matching,
            "no junction conditions are defined for ordering '" + ord.name() + "'");
    coeffs.reserve(n);
    for (int j = 0; j < n; ++j)
      coeffs.push_back(boundary_coeffs(ord, g.regions[j].m, g.regions[j + 1].m));
    widths.resize(g.regions.size(), 0.0);
    for (int j = 1; j < n; ++j) widths[j] = g.interfaces[j] - g.interfaces[j - 1];
  }

  cd amplitude(double e) const {
    const auto& regions = grid->regions;
    const int n = grid->n_interfaces();
    // k = 0 at a region threshold degenerates the phase factors; nudge off it.
    for (const auto& r : regions) {
      if (e == r.v) {
        e += 1e-12;
        break;
      }
    }
    std::vector<cd> k(regions.size());
    for (std::size_t j = 0; j < regions.size(); ++j) k[j] = wavenumber(regions[j].m, regions[j].v, e);

    auto bare = [&](int j) {
      const cd num = k[j] * coeffs[j].mu - k[j + 1] * coeffs[j].rho;
      const cd den = k[j] * coeffs[j].mu + k[j + 1] * coeffs[j].rho;
      if (std::abs(den) < 1e-300)
        raise(errc::singular_interface, "reflection_amplitude: vanishing interface denominator");
      return num / den;
    };

    cd g = bare(n - 1);
    for (int j = n - 2; j >= 0; --j) {
      // Phases enter through region widths only (origin pinned at the first
      // interface), so the amplitude is translation invariant.
      const cd phase = std::exp(cd(0.0, 2.0) * k[j + 1] * widths[j + 1]);
      const cd r = bare(j);
      const cd gp = g * phase;
      const cd num = r + gp;
      const cd den = 1.0 + r * gp;
      g = num / den;
      if (j > 0 && !(std::isfinite(g.real()) && std::isfinite(g.imag()))) {
        // Exact pole of a partial stack: continue with the limiting value.
        g = (std::abs(r) > 0.0) ? 1.0 / r : cd(std::numeric_limits<double>::infinity(), 0.0);
      }
    }
    return g;
  }

  double reflection_coefficient(double e) const {
    const cd r = amplitude(e);
    const double rc = std::norm(r);
    return std::isnan(rc) ? std::numeric_limits<double>::infinity() : rc;
  }

  // Bound states are zeros of the Wronskian between the solution decaying to
  // the left and the one decaying to the right, matched in the deepest inner
  // region. Both sweeps are renormalized step by step, so the mismatch
  // crosses zero linearly on the level-spacing scale. One-sided observables
  // (|R|^2 included) are useless for deep levels: their pole structure is
  // squeezed exponentially by the evanescent shells the state tunnels
  // through.
  double wronskian_merit(double e) const {
    const auto& regions = grid->regions;
    const int n = grid->n_interfaces();
    if (n < 2) return 1.0 / (1.0 + reflection_coefficient(e));
    for (const auto& r : regions) {
      if (e == r.v) {
        e += 1e-12;
        break;
      }
    }
    std::vector<cd> k(regions.size());
    for (std::size_t j = 0; j < regions.size(); ++j)
      k[j] = wavenumber(regions[j].m, regions[j].v, e);

    // deepest bounded region, the classically allowed anchor of every state
    int m_deep = 1;
    for (int j = 2; j < n; ++j)
      if (regions[j].v < regions[m_deep].v) m_deep = j;

    auto renorm = [](cd& a, cd& b) {
      const double s = std::max(std::abs(a), std::abs(b));
      if (s > 0.0 && std::isfinite(s)) {
        a /= s;
        b /= s;
      }
    };

    // Right-decaying solution, swept leftward to interface m_deep,
    // expressed in region m_deep.
    cd ar(1.0, 0.0), br(0.0, 0.0);
    for (int j = n - 1; j >= m_deep; --j) {
      const cd ratio = coeffs[j].rho * k[j + 1] / k[j];
      const cd t_plus = 0.5 * (coeffs[j].mu + ratio);
      const cd t_minus = 0.5 * (coeffs[j].mu - ratio);
      cd na = t_plus * ar + t_minus * br;
      cd nb = t_minus * ar + t_plus * br;
      if (j > m_deep) {
        const cd phase = std::exp(cd(0.0, 1.0) * k[j] * widths[j]);
        na /= phase;
        nb *= phase;
      }
      renorm(na, nb);
      ar = na;
      br = nb;
    }

    // Left-decaying solution, swept rightward to the same reference.
    cd al(0.0, 0.0), bl(1.0, 0.0);
    for (int j = 0; j < m_deep; ++j) {
      const cd ratio = (k[j] / k[j + 1]) / coeffs[j].rho;
      const cd inv_mu = 1.0 / coeffs[j].mu;
      cd na = 0.5 * ((al + bl) * inv_mu + (al - bl) * ratio);
      cd nb = 0.5 * ((al + bl) * inv_mu - (al - bl) * ratio);
      const cd phase = std::exp(cd(0.0, 1.0) * k[j + 1] * widths[j + 1]);
      na *= phase;
      nb /= phase;
      renorm(na, nb);
      al = na;
      bl = nb;
    }

    const double cross = std::abs(al * br - ar * bl);
    const double norms = std::sqrt((std::norm(al) + std::norm(bl)) *
                                   (std::norm(ar) + std::norm(br)));
    return norms > 0.0 ? cross / norms : 1.0;
  }
};

double golden_section_min(const std::function<double(double)>& f, double a, double b, double tol,
                          int max_iters, double* fmin, bool* converged) {
  constexpr double invphi = 0.6180339887498949;
  double c = b - invphi * (b - a);
  double d = a + invphi * (b - a);
  double fc = f(c), fd = f(d);
  int it = 0;
  while (b - a > tol && it < max_iters) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - invphi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + invphi * (b - a);
      fd = f(d);
    }
    ++it;
  }
  *converged = (b - a) <= tol;
  if (fc < fd) {
    *fmin = fc;
    return c;
  }
  *fmin = fd;
  return d;
}

}  // namespace

std::complex<double> wavenumber(double m, double v, double e) {
  if (!(m > 0.0)) raise(errc::invalid_argument, "wavenumber: mass must be positive");
  if (e >= v) return {std::sqrt(m * (e - v)), 0.0};
  return {0.0, std::sqrt(m * (v - e))};
}

std::complex<double> reflection_amplitude(const StepGrid& grid, const Ordering& ord, double e) {
  return RecursionContext(grid, ord).amplitude(e);
}

ScanResult scan(const StepGrid& grid, const Ordering& ord, double e_min, double e_max, int points) {
  if (!(e_min < e_max)) raise(errc::invalid_argument, "scan: need e_min < e_max");
  if (points < 2) raise(errc::invalid_argument, "scan: need at least 2 points");
  const RecursionContext ctx(grid, ord);
  ScanResult out;
  out.grid_n = grid.n_inner();
  out.ordering = ord.name();
  out.energies.resize(points);
  out.values.resize(points);
  const double step = (e_max - e_min) / (points - 1);
  for (int i = 0; i < points; ++i) out.energies[i] = e_min + step * i;
  parallel_for(points, [&](int i) { out.values[i] = ctx.reflection_coefficient(out.energies[i]); });
  return out;
}

SpectrumResult find_poles(const StepGrid& grid, const Ordering& ord, double e_min, double e_max,
                          double tol, const PoleSearchOptions& opts) {
  if (!(e_min < e_max)) raise(errc::invalid_argument, "find_poles: need e_min < e_max");
  if (!(tol > 0.0)) raise(errc::invalid_argument, "find_poles: tol must be positive");
  const double v_out = std::min(grid.regions.front().v, grid.regions.back().v);
  if (e_max > v_out + 1e-12)
    raise(errc::invalid_argument,
          "find_poles: bound-state window must satisfy e_max <= min(V0, V2)");
  if (opts.scan_points < 8) raise(errc::invalid_argument, "find_poles: scan_points too small");

  const RecursionContext ctx(grid, ord);
  // The scan tracks the two-sided matching mismatch, which dips to zero at
  // every pole of |R|^2; the acceptance checks below look at |R|^2 itself.
  auto merit = [&](double e) { return ctx.wronskian_merit(e); };

  const int pts = opts.scan_points;
  std::vector<double> es(pts), fs(pts);
  const double step = (e_max - e_min) / (pts - 1);
  for (int i = 0; i < pts; ++i) es[i] = e_min + step * i;
  parallel_for(pts, [&](int i) { fs[i] = merit(es[i]); });

  SpectrumResult out;
  out.method = Method::multi_step_poles;
  out.ordering = ord.name();
  out.n = grid.n_inner();
  out.tol = tol;

  // Refine past the requested tolerance: the |R|^2 spike at a pole can be far
  // narrower than tol, and the residual test needs to land inside it.
  const double refine_tol = std::min(tol, 1e-13 * (1.0 + std::abs(e_min) + std::abs(e_max)));
  for (int i = 1; i + 1 < pts; ++i) {
    if (!(fs[i] <= fs[i - 1] && fs[i] < fs[i + 1])) continue;
    double fmin = fs[i];
    bool converged = true;
    const double e_star = golden_section_min(merit, es[i - 1], es[i + 1], refine_tol,
                                             opts.max_refine_iters, &fmin, &converged);
    const double residual = 1.0 / (1.0 + ctx.reflection_coefficient(e_star));
    // A genuine pole either shows up in |R|^2 at the refined energy, or the
    // matching mismatch has collapsed outright (the |R|^2 spike can be
    // narrower than double precision can refine when the state is deep
    // behind its evanescent shells).
    const bool deep_dip = fmin < 1e-7;
    if (residual >= opts.accept_threshold && !deep_dip) continue;  // shallow dip, not a pole
    if (residual >= opts.accept_threshold && deep_dip) {
      std::ostringstream os;
      os << "pole at E=" << e_star
         << " accepted from the matching-mismatch dip; the |R|^2 spike is narrower than "
            "the refinement width";
      out.diagnostics.push_back(os.str());
    }
    if (!converged) {
      std::ostringstream os;
      os << "pole near E=" << e_star << ": refinement bracket still wider than tol after "
         << opts.max_refine_iters << " iterations";
      out.diagnostics.push_back(os.str());
    }
    if (!out.energies.empty() && std::abs(e_star - out.energies.back()) < 4.0 * tol) {
      if (residual < out.residuals.back()) {
        out.energies.back() = e_star;
        out.residuals.back() = residual;
      }
      continue;
    }
    out.energies.push_back(e_star);
    out.residuals.push_back(residual);
  }
  return out;
}

}  // namespace pdm::multistep
