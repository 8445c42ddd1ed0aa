#pragma once

#include <complex>

#include "pdm/errors.hpp"

namespace pdm::specialfn {

using cd = std::complex<double>;

struct SeriesControl {
  double rel_tol = 1e-13;
  int max_terms = 100000;
};

// Complex Gamma via the Lanczos approximation (g = 7, 9 coefficients),
// with the reflection formula for Re z < 1/2.
cd gamma(cd z);

// Kummer's confluent hypergeometric function of the first kind, 1F1(a, b; y),
// by the defining power series with a term-ratio recurrence.
cd kummer_m(cd a, cd b, cd y, const SeriesControl& ctrl = {});

// Tricomi's confluent hypergeometric function U(a, b; y). Built from the
// two-Kummer combination; b within 1e-9 of an integer is nudged off it.
// Large |y| switches to the Poincare expansion U ~ y^{-a} 2F0(a, a-b+1; -1/y).
cd tricomi_u(cd a, cd b, cd y, const SeriesControl& ctrl = {});

// Whittaker functions of the first and second kind.
cd whittaker_m(cd kappa, cd mu, cd y, const SeriesControl& ctrl = {});
cd whittaker_w(cd kappa, cd mu, cd y, const SeriesControl& ctrl = {});

// Gauss hypergeometric 2F1(a, b; c; x) for real x <= 0: defining series on
// (-1, 0], Pfaff transformation x -> x/(x-1) for x <= -1.
cd gauss_2f1(cd a, cd b, cd c, double x, const SeriesControl& ctrl = {});

namespace detail {
// Plain 2F1 series, |x| < 1. Exposed for the transformation consistency tests.
cd hyp2f1_series(cd a, cd b, cd c, double x, const SeriesControl& ctrl);
}

}  // namespace pdm::specialfn
