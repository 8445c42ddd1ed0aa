#include "pdm/ordering.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>

namespace pdm {

Ordering::Ordering(Kind kind, double alpha) : kind_(kind), alpha_(alpha) {
  switch (kind_) {
    case Kind::von_roos_symmetric:
      nu_ = 2.0 * alpha_;
      eta_ = 2.0 * (2.0 * alpha_ + alpha_ * alpha_);
      break;
    case Kind::bdd:
      nu_ = 0.0;
      eta_ = 0.0;
      break;
    case Kind::zk:
      nu_ = -1.0;
      eta_ = -1.5;
      break;
    case Kind::lk:
      nu_ = -0.5;
      eta_ = -1.0;
      break;
    case Kind::gw:
      nu_ = -1.0;
      eta_ = -2.0;
      break;
    case Kind::tl:
      nu_ = -2.0 / 3.0;
      eta_ = -4.0 / 3.0;
      break;
  }
}

Ordering Ordering::parse(const std::string& name) {
  if (name == "bdd") return bdd();
  if (name == "zk") return zk();
  if (name == "lk") return lk();
  if (name == "gw") return gw();
  if (name == "tl") return tl();
  if (name.rfind("vr:", 0) == 0) {
    const std::string tail = name.substr(3);
    char* end = nullptr;
    const double alpha = std::strtod(tail.c_str(), &end);
    if (end == tail.c_str() || *end != '\0')
      raise(errc::invalid_argument, "bad von Roos alpha in ordering name '" + name + "'");
    return von_roos(alpha);
  }
  raise(errc::invalid_argument,
        "unknown ordering '" + name + "' (expected bdd, zk, lk, gw, tl or vr:<alpha>)");
}

bool Ordering::can_match() const {
  switch (kind_) {
    case Kind::von_roos_symmetric:
    case Kind::bdd:
    case Kind::zk:
    case Kind::tl:
      return true;
    case Kind::lk:
    case Kind::gw:
      return false;
  }
  return false;
}

std::string Ordering::name() const {
  switch (kind_) {
    case Kind::bdd: return "bdd";
    case Kind::zk: return "zk";
    case Kind::lk: return "lk";
    case Kind::gw: return "gw";
    case Kind::tl: return "tl";
    case Kind::von_roos_symmetric: {
      std::ostringstream os;
      os << "vr:" << alpha_;
      return os.str();
    }
  }
  return "?";
}

namespace {

// Symmetric von Roos junction coefficients with beta = -1 - 2*alpha,
// so alpha + beta + 1 = -alpha.
MatchCoeffs von_roos_coeffs(double alpha, double ml, double mr) {
  const double pl = std::pow(ml, alpha + 1.0);
  const double pr = std::pow(mr, alpha + 1.0);
  const double ql = std::pow(ml, -alpha);
  const double qr = std::pow(mr, -alpha);
  MatchCoeffs c;
  c.mu = (pr * ql + ml) / (pl * qr + mr);
  c.rho = (pl * qr + ml) / (pr * ql + mr);
  return c;
}

}  // namespace

MatchCoeffs boundary_coeffs(const Ordering& ord, double m_left, double m_right) {
  if (!(m_left > 0.0) || !(m_right > 0.0))
    raise(errc::invalid_argument, "boundary_coeffs: masses must be positive");
  switch (ord.kind()) {
    case Ordering::Kind::bdd:
      return von_roos_coeffs(0.0, m_left, m_right);
    case Ordering::Kind::zk:
      return von_roos_coeffs(-0.5, m_left, m_right);
    case Ordering::Kind::von_roos_symmetric:
      return von_roos_coeffs(ord.alpha(), m_left, m_right);
    case Ordering::Kind::tl:
      return {(2.0 * m_left + m_right) / (m_left + 2.0 * m_right),
              (5.0 * m_left + m_right) / (m_left + 5.0 * m_right)};
    case Ordering::Kind::lk:
    case Ordering::Kind::gw:
      raise(errc::unsupported_matching,
            "no junction conditions are defined for ordering '" + ord.name() + "'");
  }
  raise(errc::invalid_argument, "boundary_coeffs: bad ordering kind");
}

std::complex<double> step_reflection_factor(const Ordering& ord,
                                            std::complex<double> k_left,
                                            std::complex<double> k_right,
                                            double m_left, double m_right) {
  const MatchCoeffs c = boundary_coeffs(ord, m_left, m_right);
  const std::complex<double> num = k_left * c.mu - k_right * c.rho;
  const std::complex<double> den = k_left * c.mu + k_right * c.rho;
  if (std::abs(den) == 0.0)
    raise(errc::singular_interface, "step_reflection_factor: vanishing interface denominator");
  return num / den;
}

double g_parameter(const Ordering& ord, const GContext& ctx) {
  const double nu = ord.nu();
  const double eta = ord.eta();
  switch (ctx.kind) {
    case GContext::Kind::exponential_dh:
      return (3.0 + 8.0 * eta - 8.0 * nu) / 2.0;
    case GContext::Kind::singular_dh:
      return 2.0 * (2.0 + 2.0 * eta - nu) + 2.0 * ctx.a;
  }
  raise(errc::invalid_argument, "g_parameter: bad context");
}

IsotonicClass classify_isotonic(double g) {
  if (g < -0.5) return IsotonicClass::non_isotonic;
  if (g < 0.0) return IsotonicClass::isotonic_negative_g;
  return IsotonicClass::isotonic_nonnegative_g;
}

}  // namespace pdm
