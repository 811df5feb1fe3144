#pragma once

#include <functional>

#include "ov/types.hpp"

namespace ov {

// Adaptive Gauss–Kronrod (7-15) quadrature for complex-valued integrands on a
// finite interval. Relative tolerance on the accumulated value.
cplx integrate_gk(const std::function<cplx(double)>& f, double a, double b,
                  double rel_tol = 1e-10, int max_depth = 16);

// Integral over [a,b] of f(s)/(s - z) for z off the interval.
cplx cauchy_integral(const std::function<cplx(double)>& f, double a, double b, cplx z,
                     double rel_tol = 1e-10);

// Principal value of the same integral for x0 in the open interval (a,b),
// by singularity subtraction: f is evaluated at x0 for the split.
cplx cauchy_principal_value(const std::function<cplx(double)>& f, double a, double b,
                            double x0, double rel_tol = 1e-10);

}  // namespace ov
