#include "pdm/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include "pdm/specialfn.hpp"

namespace pdm::analytic {

namespace {

namespace sf = pdm::specialfn;

std::function<cd(double, double)> richardson_derivative(std::function<cd(double, double)> f) {
  return [f = std::move(f)](double z, double e) {
    const double h = 1e-5 * std::abs(z) + 1e-7;
    auto central = [&](double hh) { return (f(z + hh, e) - f(z - hh, e)) / (2.0 * hh); };
    const cd d1 = central(h);
    const cd d2 = central(0.5 * h);
    return (4.0 * d2 - d1) / 3.0;
  };
}

InnerBasis make_basis(InnerBasis::Family family, std::function<cd(double, double)> psi1,
                      std::function<cd(double, double)> psi2) {
  InnerBasis basis;
  basis.family = family;
  basis.dpsi1 = richardson_derivative(psi1);
  basis.dpsi2 = richardson_derivative(psi2);
  basis.psi1 = std::move(psi1);
  basis.psi2 = std::move(psi2);
  return basis;
}

void require_negative_energy(double e, const char* family) {
  if (!(e < 0.0)) {
    std::ostringstream os;
    os << family << " basis: bound energies are negative, got E = " << e;
    raise(errc::invalid_argument, os.str());
  }
}

struct BasisBuilder {
  const Ordering& ord;

  InnerBasis operator()(const SymmetricRational& p) const {
    const double nu = ord.nu(), eta = ord.eta();
    const double rad = p.mu * p.mu * p.sigma * p.sigma + 2.0 * eta - 4.0 * nu;
    if (rad < 0.0) {
      std::ostringstream os;
      os << "no bound states: mu^2 sigma^2 + 2 eta - 4 nu = " << rad << " < 0";
      raise(errc::no_bound_state, os.str());
    }
    const double lambda = 0.5 + std::sqrt(rad);
    if (!(lambda * (lambda - 1.0) > 0.0)) {
      std::ostringstream os;
      os << "no bound states: lambda (lambda - 1) = " << lambda * (lambda - 1.0) << " <= 0";
      raise(errc::no_bound_state, os.str());
    }
    const double sigma = p.sigma;
    const double shift = (0.25 + 2.0 * eta - 3.0 * nu) / (sigma * sigma);
    auto envelope = [sigma, lambda](double z) {
      const double w = 1.0 + z * z;
      return std::pow(sigma * sigma / w, 0.25) * std::pow(w, 0.5 * lambda);
    };
    auto params = [shift, sigma, lambda](double e, cd& a, cd& b) {
      const cd kappa = std::sqrt(cd(e - shift, 0.0));  // Im >= 0 branch
      const cd ik_s = cd(0.0, 1.0) * kappa * sigma;
      a = 0.5 * (lambda + ik_s);
      b = 0.5 * (lambda - ik_s);
    };
    auto psi1 = [envelope, params](double z, double e) {
      cd a, b;
      params(e, a, b);
      return envelope(z) * sf::gauss_2f1(a, b, cd(0.5), -z * z);
    };
    auto psi2 = [envelope, params](double z, double e) {
      cd a, b;
      params(e, a, b);
      return envelope(z) * z * sf::gauss_2f1(a + 0.5, b + 0.5, cd(1.5), -z * z);
    };
    return make_basis(InnerBasis::Family::symmetric, psi1, psi2);
  }

  InnerBasis operator()(const MorseLike& p) const {
    const double nu = ord.nu(), eta = ord.eta();
    const double r2 = 1.0 + p.m0 * p.v0 + 2.0 * eta - 2.0 * nu;
    if (r2 <= 0.0) {
      std::ostringstream os;
      os << "no bound states: Whittaker index r^2 = " << r2 << " <= 0";
      raise(errc::no_bound_state, os.str());
    }
    const double r = std::sqrt(r2);
    const double sm = std::sqrt(p.m0);
    const double pref = std::pow(p.m0, 0.25) * std::sqrt(p.sigma);
    const double sigma = p.sigma, v0 = p.v0;
    // Real Whittaker solutions at x = 2 sqrt(|E| m0) e^{-sigma z} > 0; the
    // (kappa, x) -> (-kappa, -x) symmetry of the Whittaker equation maps them
    // onto the negative-argument pair of the raw substitution. The second
    // index is -r rather than the W function: the (M, W) pair degenerates at
    // every energy where the first index hits the polynomial ladder, and
    // those energies sit next to the heterostructure roots.
    auto x_of = [sm, sigma](double z, double s) { return 2.0 * s * sm * std::exp(-sigma * z); };
    auto psi1 = [=](double z, double e) {
      require_negative_energy(e, "Morse");
      const double s = std::sqrt(-e);
      const double q = v0 * sm / s;
      return pref * std::exp(-0.5 * sigma * z) * sf::whittaker_m(q, r, x_of(z, s));
    };
    auto psi2 = [=](double z, double e) {
      require_negative_energy(e, "Morse");
      const double s = std::sqrt(-e);
      const double q = v0 * sm / s;
      return pref * std::exp(-0.5 * sigma * z) * sf::whittaker_m(q, -r, x_of(z, s));
    };
    return make_basis(InnerBasis::Family::morse, psi1, psi2);
  }

  InnerBasis operator()(const Exponential& p) const {
    const double nu = ord.nu(), eta = ord.eta();
    if (!(p.c > 0.0))
      raise(errc::unsupported_analytic, "exponential basis requires a positive grading rate c");
    const double mu2 = 0.25 * (1.0 + 2.0 * eta - 2.0 * nu);
    if (mu2 < 0.0) {
      std::ostringstream os;
      os << "Whittaker index mu^2 = " << mu2 << " < 0 for ordering '" << ord.name()
         << "'; no closed-form basis";
      raise(errc::unsupported_analytic, os.str());
    }
    const double mu = std::sqrt(mu2);
    const double omega = std::sqrt(p.c * p.c * p.vc / p.mu0);
    const double yscale = 2.0 * std::sqrt(p.vc * p.mu0) / p.c;
    const double c = p.c;
    auto psi1 = [=](double z, double e) {
      return sf::whittaker_m(e / (2.0 * omega), mu, yscale * std::exp(c * z));
    };
    auto psi2 = [=](double z, double e) {
      return sf::whittaker_w(e / (2.0 * omega), mu, yscale * std::exp(c * z));
    };
    return make_basis(InnerBasis::Family::exponential, psi1, psi2);
  }

  InnerBasis operator()(const SingularParabolicMass& p) const {
    const double nu = ord.nu(), eta = ord.eta();
    const double f = (5.0 + 8.0 * eta - 4.0 * nu + 4.0 * p.a) / 16.0;
    const double g = p.a * p.b / (2.0 * std::sqrt(p.c));
    if (!(f > 0.0)) {
      std::ostringstream os;
      os << "well condition violated: requires F > 0, got F = " << f;
      raise(errc::condition_violated, os.str());
    }
    if (!(g < 0.0)) {
      std::ostringstream os;
      os << "well condition violated: requires -G > 0, got G = " << g;
      raise(errc::condition_violated, os.str());
    }
    const double mu = std::sqrt(0.25 + f);
    const double sc = std::sqrt(p.c);
    const double pref = std::pow(p.c, 0.25);
    // Second solution with index -mu (see the Morse case for why not W).
    auto psi1 = [=](double z, double e) {
      require_negative_energy(e, "singular");
      const double s = std::sqrt(-e);
      return pref * std::sqrt(z) * sf::whittaker_m(-g / (2.0 * s), mu, s * sc * z * z);
    };
    auto psi2 = [=](double z, double e) {
      require_negative_energy(e, "singular");
      const double s = std::sqrt(-e);
      return pref * std::sqrt(z) * sf::whittaker_m(-g / (2.0 * s), -mu, s * sc * z * z);
    };
    return make_basis(InnerBasis::Family::singular, psi1, psi2);
  }

  template <typename Other>
  InnerBasis operator()(const Other&) const {
    raise(errc::unsupported_analytic, "no closed-form inner basis for this profile family");
  }
};

struct MatchingMatrix {
  cd x00, x01, x10, x11;
  cd det() const { return x00 * x11 - x01 * x10; }
  // Row-norm conditioning scale; the determinant vanishes against it only at
  // actual matching solutions (a column may vanish on its own at a symmetric
  // root, so products of entries are not a usable scale).
  double scale() const {
    return std::sqrt((std::norm(x00) + std::norm(x01)) * (std::norm(x10) + std::norm(x11)));
  }
};

MatchingMatrix matching_matrix(const HeterostructureModel& model, const Ordering& ord,
                               const InnerBasis& basis, double e) {
  const PhiCoeffs phi = phi_coefficients(model, ord, basis, e);
  const double z0 = model.z0(), z1 = model.z1();
  MatchingMatrix x;
  x.x00 = basis.psi1(z0, e) + phi.phi11;
  x.x01 = basis.psi2(z0, e) + phi.phi12;
  x.x10 = basis.psi1(z1, e) + phi.phi21;
  x.x11 = basis.psi2(z1, e) + phi.phi22;
  return x;
}

double checked_real(cd value, double scale, const char* what) {
  if (std::abs(value.imag()) > 1e-8 * (scale > 0.0 ? scale : 1.0)) {
    std::ostringstream os;
    os << what << " has an unexpected imaginary part (" << value.imag() << " vs scale " << scale
       << ")";
    raise(errc::numerical_inconsistency, os.str());
  }
  return value.real();
}

// Wronskian of the basis pair at the inner midpoint. It vanishes exactly
// where the pair degenerates (the polynomial ladder of the W-type bases);
// dividing the determinant by it removes those spurious sign structures.
cd basis_wronskian(const HeterostructureModel& model, const InnerBasis& basis, double e) {
  const double zm = 0.5 * (model.z0() + model.z1());
  return basis.psi1(zm, e) * basis.dpsi2(zm, e) - basis.psi2(zm, e) * basis.dpsi1(zm, e);
}

double normalized_det(const HeterostructureModel& model, const Ordering& ord,
                      const InnerBasis& basis, double e) {
  const MatchingMatrix x = matching_matrix(model, ord, basis, e);
  const double det = checked_real(x.det(), x.scale(), "det X");
  const double zm = 0.5 * (model.z0() + model.z1());
  const double wscale = std::abs(basis.psi1(zm, e)) * std::abs(basis.dpsi2(zm, e)) +
                        std::abs(basis.psi2(zm, e)) * std::abs(basis.dpsi1(zm, e));
  const double w = checked_real(basis_wronskian(model, basis, e), wscale, "basis Wronskian");
  return det / w;
}

double residual_of(const MatchingMatrix& x) {
  const double scale = x.scale();
  return std::abs(x.det()) / (scale > 0.0 ? scale : 1.0);
}

}  // namespace

InnerBasis inner_basis(const HeterostructureModel& model, const Ordering& ord) {
  return std::visit(BasisBuilder{ord}, model.family());
}

PhiCoeffs phi_coefficients(const HeterostructureModel& model, const Ordering& ord,
                           const InnerBasis& basis, double e) {
  const double v_out = std::min(model.v0(), model.v2());
  if (!(e < v_out))
    raise(errc::invalid_argument,
          "phi_coefficients: bound-state energy must lie below both outer potentials");
  const double eta0 = std::sqrt(model.m0() * (model.v0() - e));
  const double eta2 = std::sqrt(model.m2() * (model.v2() - e));
  const double z0 = model.z0(), z1 = model.z1();

  PhiCoeffs out;
  switch (ord.kind()) {
    case Ordering::Kind::bdd: {
      const double f0 = model.m0() / model.inner_mass(z0);
      const double f2 = model.m2() / model.inner_mass(z1);
      out.phi11 = -(f0 / eta0) * basis.dpsi1(z0, e);
      out.phi12 = -(f0 / eta0) * basis.dpsi2(z0, e);
      out.phi21 = (f2 / eta2) * basis.dpsi1(z1, e);
      out.phi22 = (f2 / eta2) * basis.dpsi2(z1, e);
      return out;
    }
    case Ordering::Kind::zk: {
      // d/dz of psi/sqrt(m_in), total derivative through the mass profile.
      auto w_prime = [&](const std::function<cd(double, double)>& psi,
                         const std::function<cd(double, double)>& dpsi, double z) {
        const double m = model.inner_mass(z);
        const double m1 = model.inner_mass_d1(z);
        return dpsi(z, e) / std::sqrt(m) - psi(z, e) * m1 / (2.0 * m * std::sqrt(m));
      };
      const double s0 = std::sqrt(model.inner_mass(z0));
      const double s2 = std::sqrt(model.inner_mass(z1));
      out.phi11 = -(s0 / eta0) * w_prime(basis.psi1, basis.dpsi1, z0);
      out.phi12 = -(s0 / eta0) * w_prime(basis.psi2, basis.dpsi2, z0);
      out.phi21 = (s2 / eta2) * w_prime(basis.psi1, basis.dpsi1, z1);
      out.phi22 = (s2 / eta2) * w_prime(basis.psi2, basis.dpsi2, z1);
      return out;
    }
    default:
      raise(errc::unsupported_analytic,
            "junction coefficients of the matching matrix are defined for the bdd and zk "
            "orderings only (got '" +
                ord.name() + "')");
  }
}

double det_x(const HeterostructureModel& model, const Ordering& ord, double e) {
  const InnerBasis basis = inner_basis(model, ord);
  return normalized_det(model, ord, basis, e);
}

double matching_residual(const HeterostructureModel& model, const Ordering& ord, double e) {
  const InnerBasis basis = inner_basis(model, ord);
  return residual_of(matching_matrix(model, ord, basis, e));
}

SpectrumResult solve_transcendental(const HeterostructureModel& model, const Ordering& ord,
                                    double e_min, double e_max, double tol) {
  if (!(e_min < e_max)) raise(errc::invalid_argument, "solve_transcendental: need e_min < e_max");
  if (!(tol > 0.0)) raise(errc::invalid_argument, "solve_transcendental: tol must be positive");
  const double v_out = std::min(model.v0(), model.v2());
  if (e_max > v_out + 1e-12)
    raise(errc::invalid_argument,
          "solve_transcendental: bound-state window must satisfy e_max <= min(V0, V2)");

  const InnerBasis basis = inner_basis(model, ord);
  auto det = [&](double e) { return normalized_det(model, ord, basis, e); };

  constexpr int scan_points = 2000;
  std::vector<double> es(scan_points), ds(scan_points);
  const double step = (e_max - e_min) / (scan_points - 1);
  for (int i = 0; i < scan_points; ++i) {
    es[i] = e_min + step * i;
    ds[i] = det(es[i]);
  }

  SpectrumResult out;
  out.method = Method::transcendental;
  out.ordering = ord.name();
  out.n = 0;
  out.tol = tol;

  for (int i = 0; i + 1 < scan_points; ++i) {
    if (ds[i] == 0.0) {
      out.energies.push_back(es[i]);
      out.residuals.push_back(0.0);
      continue;
    }
    if (!(ds[i] * ds[i + 1] < 0.0)) continue;
    double a = es[i], b = es[i + 1];
    double fa = ds[i];
    for (int it = 0; it < 200 && (b - a) > tol; ++it) {
      const double mid = 0.5 * (a + b);
      const double fm = det(mid);
      if (fm == 0.0) {
        a = b = mid;
        break;
      }
      if (fa * fm < 0.0) {
        b = mid;
      } else {
        a = mid;
        fa = fm;
      }
    }
    const double e_star = 0.5 * (a + b);
    out.energies.push_back(e_star);
    out.residuals.push_back(residual_of(matching_matrix(model, ord, basis, e_star)));
  }
  return out;
}

BoundWavefunction wavefunction(const HeterostructureModel& model, const Ordering& ord, double e,
                               double normalization_r) {
  const InnerBasis basis = inner_basis(model, ord);
  const MatchingMatrix x = matching_matrix(model, ord, basis, e);
  if (!(residual_of(x) <= 1e-4)) {
    std::ostringstream os;
    os << "wavefunction: E = " << e
       << " is not a root of the transcendental equation (residual = " << residual_of(x) << ")";
    raise(errc::numerical_inconsistency, os.str());
  }

  const PhiCoeffs phi = phi_coefficients(model, ord, basis, e);
  const double z0 = model.z0(), z1 = model.z1();
  const double eta0 = std::sqrt(model.m0() * (model.v0() - e));
  const double eta2 = std::sqrt(model.m2() * (model.v2() - e));
  const cd psi1_z0 = basis.psi1(z0, e), psi2_z0 = basis.psi2(z0, e);
  const cd denom = phi.phi11 * psi2_z0 - phi.phi12 * psi1_z0;
  if (std::abs(denom) == 0.0)
    raise(errc::numerical_inconsistency, "wavefunction: degenerate matching system");

  BoundWavefunction wf;
  wf.e = e;
  wf.r = normalization_r;
  const double left_tail = normalization_r * std::exp(eta0 * z0);
  wf.p = -(phi.phi12 + psi2_z0) / denom * left_tail;
  wf.q = (phi.phi11 + psi1_z0) / denom * left_tail;
  wf.t = (wf.p * basis.psi1(z1, e) + wf.q * basis.psi2(z1, e)) * std::exp(eta2 * z1);

  const cd p = wf.p, q = wf.q, t = wf.t;
  const double r = normalization_r;
  auto psi1 = basis.psi1, psi2 = basis.psi2;
  wf.value = [=](double z) -> cd {
    if (z < z0) return r * std::exp(eta0 * z);
    if (z > z1) return t * std::exp(-eta2 * z);
    return p * psi1(z, e) + q * psi2(z, e);
  };
  return wf;
}

QuarterPowerTransform quarter_power_transform(const HeterostructureModel& model,
                                              const Ordering& ord) {
  if (const auto* steps = std::get_if<ExplicitSteps>(&model.family())) {
    bool uniform = true;
    for (const auto& step : steps->steps) uniform = uniform && step.m_right == steps->m_left;
    if (!uniform)
      raise(errc::invalid_argument, "quarter_power_transform: smooth inner mass required");
  }

  const double z0 = model.z0(), z1 = model.z1();
  constexpr int panels = 4096;
  const double h = (z1 - z0) / panels;

  // Cumulative Simpson table of integral sqrt(m_in).
  std::vector<double> prefix(panels + 1, 0.0);
  auto sm = [&](double z) { return std::sqrt(model.inner_mass(z)); };
  for (int i = 0; i < panels; ++i) {
    const double za = z0 + h * i;
    prefix[i + 1] = prefix[i] + h / 6.0 * (sm(za) + 4.0 * sm(za + 0.5 * h) + sm(za + h));
  }
  const double rho1 = prefix.back();
  const double sm0 = std::sqrt(model.m0());
  const double sm2 = std::sqrt(model.m2());

  auto rho_of_z = [=, prefix = std::move(prefix)](double z) {
    if (z <= z0) return sm0 * (z - z0);
    if (z >= z1) return rho1 + sm2 * (z - z1);
    const int i = std::min(panels - 1, static_cast<int>((z - z0) / h));
    const double za = z0 + h * i;
    const double w = z - za;
    double part = 0.0;
    if (w > 0.0) part = w / 6.0 * (sm(za) + 4.0 * sm(za + 0.5 * w) + sm(za + w));
    return prefix[i] + part;
  };

  auto z_of_rho = [=](double rho) {
    if (rho <= 0.0) return z0 + rho / sm0;
    if (rho >= rho1) return z1 + (rho - rho1) / sm2;
    double a = z0, b = z1;
    for (int it = 0; it < 200 && (b - a) > 1e-14 * (1.0 + std::abs(a)); ++it) {
      const double mid = 0.5 * (a + b);
      if (rho_of_z(mid) < rho) {
        a = mid;
      } else {
        b = mid;
      }
    }
    return 0.5 * (a + b);
  };

  const double eta = ord.eta(), nu = ord.nu();
  auto v_tilde_of_z = [=, &model](double z) {
    if (z <= z0) return model.v0();
    if (z >= z1) return model.v2();
    const double m = model.inner_mass(z);
    const double m1 = model.inner_mass_d1(z);
    const double m2 = model.inner_mass_d2(z);
    return model.inner_potential(z) + 0.5 * (eta + 7.0 / 8.0) * m1 * m1 / (m * m * m) -
           0.5 * (nu + 0.5) * m2 / (m * m);
  };

  QuarterPowerTransform out;
  out.rho_of_z = rho_of_z;
  out.z_of_rho = z_of_rho;
  out.v_tilde_of_z = v_tilde_of_z;
  out.v_tilde = [=](double rho) { return v_tilde_of_z(z_of_rho(rho)); };
  return out;
}

HalfPowerTransform half_power_transform(const HeterostructureModel& model, const Ordering& ord) {
  const double eta = ord.eta(), nu = ord.nu();
  const double z0 = model.z0(), z1 = model.z1();

  HalfPowerTransform out;
  out.v_star_minus_estar = [=, &model](double z, double e) {
    const auto local = model.eval(z);
    double m1 = 0.0, m2 = 0.0;
    if (z > z0 && z < z1) {
      m1 = model.inner_mass_d1(z);
      m2 = model.inner_mass_d2(z);
    }
    const double m = local.m;
    return 0.25 * (m1 * m1 / (m * m)) * (3.0 + 2.0 * eta) - 0.5 * (m2 / m) * (1.0 + nu) +
           (local.v - e) * m;
  };

  if (const auto* p = std::get_if<Exponential>(&model.family())) {
    const double estar = p->c * p->c * (-1.0 - 2.0 * eta + 2.0 * nu) / 4.0;
    out.e_star = [estar](double) { return estar; };
    out.e_star_rule = "E* = c^2 (-1 - 2 eta + 2 nu) / 4";
  } else if (const auto* s = std::get_if<SingularParabolicMass>(&model.family())) {
    const double estar = -s->a * s->b;
    out.g = g_parameter(ord, GContext::singular(s->a));
    out.e_star = [estar](double) { return estar; };
    out.e_star_rule = "E* = -A B, with omega^2 = -4 c E and g = 2 (2 + 2 eta - nu) + 2 A";
  } else if (const auto* x = std::get_if<ExplicitSteps>(&model.family())) {
    bool uniform = true;
    for (const auto& step : x->steps) uniform = uniform && step.m_right == x->m_left;
    if (uniform) {
      out.e_star = [](double e) { return e; };
      out.e_star_rule = "E* = E (constant mass)";
    } else {
      out.e_star_rule = "none";
    }
  } else {
    out.e_star_rule = "none";
  }
  return out;
}

}  // namespace pdm::analytic
