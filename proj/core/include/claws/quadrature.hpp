#pragma once

#include <functional>

namespace claws {

/// Adaptive Gauss-Kronrod (7/15) integral of a smooth, decaying integrand
/// over [0, inf).  The range is truncated at R_max where the integrand tail
/// falls below 1e-16 of its peak, and split into geometric panels so that
/// integrands concentrated near r = 0 (late-time heat kernels) are resolved.
/// `scale` is a characteristic radius of the integrand.  Throws
/// QuadratureError when no truncation radius is found (growing integrand).
double integrate_half_line(const std::function<double(double)>& f, double scale,
                           double rel_tol = 1e-10);

/// Adaptive Gauss-Kronrod integral over [a, b].
double integrate_interval(const std::function<double(double)>& f, double a, double b,
                          double rel_tol = 1e-10);

}  // namespace claws
