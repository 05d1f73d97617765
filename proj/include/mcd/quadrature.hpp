#pragma once

#include <functional>
#include <vector>

namespace mcd {

// Adaptive Gauss-Kronrod style integration of a smooth integrand.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double rel_tol = 1e-10, double abs_tol = 1e-14, int max_depth = 40);

// Integrates over [a, b] allowing integrable 1/sqrt divergences at either
// endpoint: the interval is halved and each half mapped through t = u^2 so the
// transformed integrand is bounded.
double integrate_sqrt_endpoints(const std::function<double(double)>& f, double a, double b,
                                double rel_tol = 1e-10, double abs_tol = 1e-14);

// Splits [a, b] at the interior breakpoints and integrates each piece with
// sqrt-endpoint handling. Breakpoints need not be sorted or inside the range.
double integrate_piecewise(const std::function<double(double)>& f, double a, double b,
                           std::vector<double> breakpoints, double rel_tol = 1e-10,
                           double abs_tol = 1e-14);

} // namespace mcd
