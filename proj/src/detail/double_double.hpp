#pragma once

#include <cmath>
#include <complex>

// Minimal error-free-transform double-double arithmetic, used to keep the
// hypergeometric series sums accurate through the large cancellations that
// appear in the Tricomi-U two-term combination and at negative arguments.

namespace pdm::detail {

struct dd {
  double hi = 0.0;
  double lo = 0.0;
  dd() = default;
  dd(double h) : hi(h), lo(0.0) {}
  dd(double h, double l) : hi(h), lo(l) {}
  double value() const { return hi + lo; }
};

inline dd two_sum(double a, double b) {
  const double s = a + b;
  const double bb = s - a;
  return {s, (a - (s - bb)) + (b - bb)};
}

inline dd quick_two_sum(double a, double b) {
  const double s = a + b;
  return {s, b - (s - a)};
}

inline dd two_prod(double a, double b) {
  const double p = a * b;
  return {p, std::fma(a, b, -p)};
}

inline dd add(const dd& a, const dd& b) {
  dd s = two_sum(a.hi, b.hi);
  return quick_two_sum(s.hi, s.lo + a.lo + b.lo);
}

inline dd sub(const dd& a, const dd& b) { return add(a, dd{-b.hi, -b.lo}); }

inline dd mul(const dd& a, const dd& b) {
  dd p = two_prod(a.hi, b.hi);
  return quick_two_sum(p.hi, p.lo + a.hi * b.lo + a.lo * b.hi);
}

inline dd mul(const dd& a, double b) {
  dd p = two_prod(a.hi, b);
  return quick_two_sum(p.hi, p.lo + a.lo * b);
}

inline dd div(const dd& a, const dd& b) {
  const double q1 = a.hi / b.hi;
  dd r = sub(a, mul(b, q1));
  const double q2 = r.hi / b.hi;
  r = sub(r, mul(b, q2));
  const double q3 = r.hi / b.hi;
  return add(quick_two_sum(q1, q2), dd{q3});
}

// Complex value with double-double components.
struct ddc {
  dd re, im;
  ddc() = default;
  ddc(double r) : re(r), im(0.0) {}
  ddc(const dd& r, const dd& i) : re(r), im(i) {}
  ddc(const std::complex<double>& z) : re(z.real()), im(z.imag()) {}
  std::complex<double> value() const { return {re.value(), im.value()}; }
};

inline ddc add(const ddc& a, const ddc& b) { return {add(a.re, b.re), add(a.im, b.im)}; }

inline ddc mul(const ddc& a, const ddc& b) {
  return {sub(mul(a.re, b.re), mul(a.im, b.im)), add(mul(a.re, b.im), mul(a.im, b.re))};
}

inline ddc div(const ddc& a, const ddc& b) {
  const dd denom = add(mul(b.re, b.re), mul(b.im, b.im));
  const ddc num = {add(mul(a.re, b.re), mul(a.im, b.im)),
                   sub(mul(a.im, b.re), mul(a.re, b.im))};
  return {div(num.re, denom), div(num.im, denom)};
}

inline double abs_estimate(const ddc& a) { return std::hypot(a.re.hi, a.im.hi); }

}  // namespace pdm::detail
