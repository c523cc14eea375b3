#pragma once

#include <functional>

namespace rgg {

// Regularized incomplete beta function I_x(a,b), continued-fraction evaluation.
// Accurate to ~1e-14 relative for a,b not astronomically large.
double reg_incomplete_beta(double x, double a, double b);

// Complete elliptic integral of the second kind,
// E(k) = \int_0^{pi/2} sqrt(1 - k^2 sin^2 t) dt, for k in [0,1]. AGM-based.
double elliptic_E(double k);

// Adaptive Gauss-Kronrod (G7/K15) quadrature of f on [a,b].
// Subdivides until the local error estimate is below
// max(rel_tol * |integral|, abs_floor).
double integrate(const std::function<double(double)>& f, double a, double b,
                 double rel_tol = 1e-10, double abs_floor = 1e-14);

}  // namespace rgg
