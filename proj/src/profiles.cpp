#include "pdm/profiles.hpp"

#include <cmath>
#include <sstream>
#include <utility>

namespace pdm {

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) raise(errc::invalid_argument, msg);
}

struct InnerFuncs {
  std::function<double(double)> v, m, m1, m2;
};

// Shared Gaussian envelope exp(-(z^2/z0^2) ln(1+z0^2)); equals 1/(1+z0^2) at z0.
InnerFuncs symmetric_funcs(double mu, double sigma) {
  const double mu2 = mu * mu, s2 = sigma * sigma;
  InnerFuncs f;
  f.v = [mu2](double z) { return -mu2 / (1.0 + z * z); };
  f.m = [s2](double z) { return s2 / (1.0 + z * z); };
  f.m1 = [s2](double z) {
    const double d = 1.0 + z * z;
    return -2.0 * s2 * z / (d * d);
  };
  f.m2 = [s2](double z) {
    const double d = 1.0 + z * z;
    return s2 * (6.0 * z * z - 2.0) / (d * d * d);
  };
  return f;
}

std::function<double(double)> gaussian_envelope(double z0) {
  const double beta = std::log(1.0 + z0 * z0) / (z0 * z0);
  return [beta](double z) { return std::exp(-beta * z * z); };
}

}  // namespace

HeterostructureModel::HeterostructureModel(ProfileFamily family, double z0, double z1, double v0,
                                           double m0, double v2, double m2,
                                           std::function<double(double)> inner_potential,
                                           std::function<double(double)> inner_mass,
                                           std::function<double(double)> inner_mass_d1,
                                           std::function<double(double)> inner_mass_d2)
    : family_(std::move(family)),
      z0_(z0),
      z1_(z1),
      v0_(v0),
      m0_(m0),
      v2_(v2),
      m2_(m2),
      inner_potential_(std::move(inner_potential)),
      inner_mass_(std::move(inner_mass)),
      inner_mass_d1_(std::move(inner_mass_d1)),
      inner_mass_d2_(std::move(inner_mass_d2)) {}

HeterostructureModel::Local HeterostructureModel::eval(double z) const {
  if (z <= z0_) return {v0_, m0_};
  if (z >= z1_) return {v2_, m2_};
  return {inner_potential_(z), inner_mass_(z)};
}

HeterostructureModel build_model(const ProfileFamily& family) {
  if (const auto* p = std::get_if<ParabolicDouble>(&family))
    return build_model(family, p->b, p->d);
  if (const auto* s = std::get_if<ExplicitSteps>(&family)) {
    require(!s->steps.empty(), "ExplicitSteps: at least one interface required");
    return build_model(family, s->steps.front().z, s->steps.back().z);
  }
  raise(errc::invalid_argument, "build_model: this family needs explicit junction positions");
}

HeterostructureModel build_model(const ProfileFamily& family, double z0, double z1) {
  struct Builder {
    double z0, z1;

    HeterostructureModel continuous(const ProfileFamily& fam, const InnerFuncs& f) const {
      // Table convention for the symmetric/Gaussian families:
      // outer constants pinned to the inner value at z0 on both sides.
      const double v = f.v(z0), m = f.m(z0);
      return HeterostructureModel(fam, z0, z1, v, m, v, m, f.v, f.m, f.m1, f.m2);
    }

    HeterostructureModel endpoint(const ProfileFamily& fam, const InnerFuncs& f) const {
      return HeterostructureModel(fam, z0, z1, f.v(z0), f.m(z0), f.v(z1), f.m(z1), f.v, f.m, f.m1,
                                  f.m2);
    }

    HeterostructureModel operator()(const SymmetricRational& p) const {
      require(p.mu != 0.0 && p.sigma != 0.0, "SymmetricRational: mu and sigma must be non-zero");
      return continuous(p, symmetric_funcs(p.mu, p.sigma));
    }

    HeterostructureModel operator()(const GaussianMass& p) const {
      require(p.mu != 0.0 && p.sigma != 0.0, "GaussianMass: mu and sigma must be non-zero");
      require(z0 != 0.0, "GaussianMass: z0 must be non-zero");
      InnerFuncs f = symmetric_funcs(p.mu, p.sigma);
      const double s2 = p.sigma * p.sigma;
      const double beta = std::log(1.0 + z0 * z0) / (z0 * z0);
      auto env = gaussian_envelope(z0);
      f.m = [s2, env](double z) { return s2 * env(z); };
      f.m1 = [s2, beta, env](double z) { return -2.0 * beta * z * s2 * env(z); };
      f.m2 = [s2, beta, env](double z) {
        return (4.0 * beta * beta * z * z - 2.0 * beta) * s2 * env(z);
      };
      return continuous(p, f);
    }

    HeterostructureModel operator()(const GaussianMassDelta& p) const {
      require(p.mu != 0.0 && p.sigma != 0.0, "GaussianMassDelta: mu and sigma must be non-zero");
      require(p.delta > 0.0, "GaussianMassDelta: delta must be positive");
      require(z0 != 0.0, "GaussianMassDelta: z0 must be non-zero");
      InnerFuncs f = symmetric_funcs(p.mu, p.sigma);
      const double scale = p.sigma * p.sigma / (1.0 + z0 * z0);
      const double w = z0 * z0, d = p.delta;
      f.m = [scale, w, d](double z) { return scale * (w * std::exp(-d * z * z) + 1.0); };
      f.m1 = [scale, w, d](double z) { return scale * w * (-2.0 * d * z) * std::exp(-d * z * z); };
      f.m2 = [scale, w, d](double z) {
        return scale * w * (4.0 * d * d * z * z - 2.0 * d) * std::exp(-d * z * z);
      };
      return continuous(p, f);
    }

    HeterostructureModel operator()(const GaussianPotential& p) const {
      require(p.mu != 0.0 && p.sigma != 0.0, "GaussianPotential: mu and sigma must be non-zero");
      require(z0 != 0.0, "GaussianPotential: z0 must be non-zero");
      InnerFuncs f = symmetric_funcs(p.mu, p.sigma);
      const double mu2 = p.mu * p.mu;
      auto env = gaussian_envelope(z0);
      f.v = [mu2, env](double z) { return -mu2 * env(z); };
      return continuous(p, f);
    }

    HeterostructureModel operator()(const GaussianPotentialDelta& p) const {
      require(p.mu != 0.0 && p.sigma != 0.0,
              "GaussianPotentialDelta: mu and sigma must be non-zero");
      require(p.delta > 0.0, "GaussianPotentialDelta: delta must be positive");
      require(z0 != 0.0, "GaussianPotentialDelta: z0 must be non-zero");
      InnerFuncs f = symmetric_funcs(p.mu, p.sigma);
      const double scale = -p.mu * p.mu / (1.0 + z0 * z0);
      const double w = z0 * z0, d = p.delta;
      f.v = [scale, w, d](double z) { return scale * (w * std::exp(-d * z * z) + 1.0); };
      return continuous(p, f);
    }

    HeterostructureModel operator()(const MorseLike& p) const {
      require(p.v0 > 0.0 && p.m0 > 0.0 && p.sigma > 0.0,
              "MorseLike: v0, m0 and sigma must be positive");
      const double v0 = p.v0, m0 = p.m0, s = p.sigma;
      InnerFuncs f;
      f.v = [v0, s](double z) {
        const double e = std::exp(s * z);
        return -v0 * e * (2.0 - e);
      };
      f.m = [m0, s](double z) { return m0 * s * s * std::exp(-2.0 * s * z); };
      f.m1 = [m0, s](double z) { return -2.0 * s * m0 * s * s * std::exp(-2.0 * s * z); };
      f.m2 = [m0, s](double z) { return 4.0 * s * s * m0 * s * s * std::exp(-2.0 * s * z); };
      return endpoint(p, f);
    }

    HeterostructureModel operator()(const HyperbolicMass& p) const {
      require(p.tau > 0.0, "HyperbolicMass: tau must be positive");
      require(p.v0 > 0.0 && p.m0 > 0.0 && p.sigma > 0.0,
              "HyperbolicMass: v0, m0 and sigma must be positive");
      const double v0 = p.v0, s = p.sigma, tau = p.tau;
      const double base = p.m0 * s * s;
      const double lo = base * std::exp(-2.0 * s * z0);
      const double hi = base * std::exp(-2.0 * s * z1);
      const double span = hi - lo;
      const double tnorm = std::tanh(tau * (z1 - z0));
      const double a = z0;
      InnerFuncs f;
      f.v = [v0, s](double z) {
        const double e = std::exp(s * z);
        return -v0 * e * (2.0 - e);
      };
      f.m = [=](double z) { return span * std::tanh(tau * (z - a)) / tnorm + lo; };
      f.m1 = [=](double z) {
        const double c = std::cosh(tau * (z - a));
        return span * tau / (c * c * tnorm);
      };
      f.m2 = [=](double z) {
        const double c = std::cosh(tau * (z - a));
        const double t = std::tanh(tau * (z - a));
        return -2.0 * span * tau * tau * t / (c * c * tnorm);
      };
      return endpoint(p, f);
    }

    HeterostructureModel operator()(const ParabolicDouble& p) const {
      require(p.a < p.b && p.b < p.c && p.c < p.d, "ParabolicDouble: need a < b < c < d");
      require(p.m0 > 0.0 && p.m1 > 0.0, "ParabolicDouble: masses must be positive");
      require(std::abs(z0 - p.b) < 1e-12 * (1.0 + std::abs(p.b)) &&
                  std::abs(z1 - p.d) < 1e-12 * (1.0 + std::abs(p.d)),
              "ParabolicDouble: junctions are fixed at z0=b, z1=d");
      const double c1 = 0.5 * (p.c + p.a), c2 = 0.5 * (p.c - p.a);
      const double c3 = 0.5 * (p.d + p.c), c4 = 0.5 * (p.d - p.c);
      const double v0 = p.v0, m0 = p.m0, m1 = p.m1, cz = p.c;
      auto shape = [=](double z) {
        const double t = (z < cz) ? (z - c1) / c2 : (z - c3) / c4;
        return t * t;
      };
      InnerFuncs f;
      f.v = [v0, shape](double z) { return v0 * shape(z); };
      f.m = [m0, m1, shape](double z) { return m1 + (m0 - m1) * shape(z); };
      f.m1 = [=](double z) {
        return (z < cz) ? 2.0 * (m0 - m1) * (z - c1) / (c2 * c2)
                        : 2.0 * (m0 - m1) * (z - c3) / (c4 * c4);
      };
      f.m2 = [=](double z) {
        return (z < cz) ? 2.0 * (m0 - m1) / (c2 * c2) : 2.0 * (m0 - m1) / (c4 * c4);
      };
      return HeterostructureModel(p, z0, z1, v0, m0, v0, m0, f.v, f.m, f.m1, f.m2);
    }

    HeterostructureModel operator()(const Exponential& p) const {
      require(p.vc > 0.0 && p.mu0 > 0.0, "Exponential: vc and mu0 must be positive");
      require(p.c != 0.0, "Exponential: c must be non-zero");
      const double vc = p.vc, mu0 = p.mu0, c = p.c;
      InnerFuncs f;
      f.v = [vc, c](double z) { return vc * std::exp(c * z); };
      f.m = [mu0, c](double z) { return mu0 * std::exp(c * z); };
      f.m1 = [mu0, c](double z) { return c * mu0 * std::exp(c * z); };
      f.m2 = [mu0, c](double z) { return c * c * mu0 * std::exp(c * z); };
      const double v2 = f.v(z1);
      return HeterostructureModel(p, z0, z1, p.lambda * v2, f.m(z0), v2, f.m(z1), f.v, f.m, f.m1,
                                  f.m2);
    }

    HeterostructureModel operator()(const SingularParabolicMass& p) const {
      require(p.a > 0.0, "SingularParabolicMass: a must be positive");
      require(p.b < 0.0, "SingularParabolicMass: b must be negative");
      require(p.c > 0.0, "SingularParabolicMass: c must be positive");
      require(z0 > 0.0, "SingularParabolicMass: defined for z > 0 only (z0 must be positive)");
      const double a = p.a, b = p.b, c = p.c;
      InnerFuncs f;
      f.v = [a, b, c](double z) {
        const double z2 = z * z;
        return (a / c) * (1.0 / (z2 * z2) + b / z2);
      };
      f.m = [c](double z) { return c * z * z; };
      f.m1 = [c](double z) { return 2.0 * c * z; };
      f.m2 = [c](double) { return 2.0 * c; };
      return endpoint(p, f);
    }

    HeterostructureModel operator()(const ExplicitSteps& p) const {
      require(!p.steps.empty(), "ExplicitSteps: at least one interface required");
      require(p.m_left > 0.0, "ExplicitSteps: masses must be positive");
      for (std::size_t i = 0; i < p.steps.size(); ++i) {
        require(p.steps[i].m_right > 0.0, "ExplicitSteps: masses must be positive");
        if (i > 0) require(p.steps[i - 1].z < p.steps[i].z, "ExplicitSteps: interfaces must increase");
      }
      const ExplicitSteps steps = p;
      auto lookup = [steps](double z) {
        std::size_t k = 0;
        while (k + 1 < steps.steps.size() && steps.steps[k + 1].z <= z) ++k;
        return steps.steps[k];
      };
      auto v = [lookup](double z) { return lookup(z).v_right; };
      auto m = [lookup](double z) { return lookup(z).m_right; };
      auto zero = [](double) { return 0.0; };
      return HeterostructureModel(p, p.steps.front().z, p.steps.back().z, p.v_left, p.m_left,
                                  p.steps.back().v_right, p.steps.back().m_right, v, m, zero, zero);
    }
  };

  if (!std::holds_alternative<ExplicitSteps>(family))
    require(z0 < z1, "build_model: z0 must be less than z1");
  HeterostructureModel model = std::visit(Builder{z0, z1}, family);

  if (!std::holds_alternative<ExplicitSteps>(family)) {
    // Spot-check mass positivity across the inner region.
    for (int i = 0; i <= 64; ++i) {
      const double z = model.z0() + (model.z1() - model.z0()) * i / 64.0;
      if (!(model.inner_mass(z) > 0.0)) {
        std::ostringstream os;
        os << "build_model: inner mass is not positive at z = " << z;
        raise(errc::invalid_argument, os.str());
      }
    }
  }
  return model;
}

StepGrid discretize(const HeterostructureModel& model, int n) {
  if (const auto* s = std::get_if<ExplicitSteps>(&model.family())) {
    StepGrid grid;
    grid.regions.push_back({s->v_left, s->m_left});
    for (const auto& step : s->steps) {
      grid.interfaces.push_back(step.z);
      grid.regions.push_back({step.v_right, step.m_right});
    }
    return grid;
  }
  if (n < 1) raise(errc::invalid_argument, "discretize: n must be >= 1");

  const double h = (model.z1() - model.z0()) / n;
  StepGrid grid;
  grid.interfaces.resize(n + 1);
  grid.regions.resize(n + 2);
  grid.regions.front() = {model.v0(), model.m0()};
  for (int j = 0; j <= n; ++j) grid.interfaces[j] = model.z0() + h * j;
  grid.interfaces.back() = model.z1();
  for (int j = 1; j <= n; ++j) {
    const double mid = model.z0() + h * (j - 0.5);
    grid.regions[j] = {model.inner_potential(mid), model.inner_mass(mid)};
  }
  grid.regions.back() = {model.v2(), model.m2()};
  return grid;
}

}  // namespace pdm
