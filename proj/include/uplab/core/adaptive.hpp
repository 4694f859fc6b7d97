#pragma once

#include <functional>
#include <vector>

namespace uplab {

struct LogIntegral {
  double log_value = 0.0;  // log of the integral (-inf for an identically zero integrand)
  double rel_error = 0.0;  // estimated |error| / value
  bool converged = false;
  int depth = 0;           // deepest bisection level used
  long evaluations = 0;
};

struct AdaptiveOptions {
  double reltol = 1e-10;
  int max_intervals = 4000;
  int prescan_per_segment = 8;
};

// Globally adaptive 21-point Gauss-Kronrod quadrature of exp(log_f) on [lo, hi].
// The integrand is supplied as a logarithm and integrated with a common shift
// (the largest log value seen), so integrands far outside double range are
// fine as long as their logarithm is finite. Breakpoints inside (lo, hi)
// become initial interval boundaries (kinks, zeros, peaks).
LogIntegral integrate_log(const std::function<double(double)>& log_f, double lo, double hi,
                          std::vector<double> breakpoints, const AdaptiveOptions& opts = {});

}  // namespace uplab
