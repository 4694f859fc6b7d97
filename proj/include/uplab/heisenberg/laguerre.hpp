#pragma once

namespace uplab::heisenberg {

struct LaguerreValue {
  int k = 0;
  int nu = 0;
  double x = 0.0;
  double value = 0.0;      // inf when it overflows; log_abs stays finite
  double log_abs = 0.0;    // log|L_k^nu(x)|, -inf at a zero
  int sign = 1;
};

// Generalized Laguerre polynomial by the three-term recurrence, rescaled as it
// grows so that large arguments and degrees stay representable in log form.
LaguerreValue laguerre(int k, int nu, double x);

// L_k^nu((y^2+v^2)/2) e^{-(y^2+v^2)/4}
double laguerre_phi(int k, int nu, double y, double v);

// the same at the imaginary point (2iy, 2iv): L_k^nu(-2 rho^2) e^{rho^2}, rho^2 = y^2+v^2
double laguerre_phi_imag(int k, int nu, double y, double v);
double log_laguerre_phi_imag(int k, int nu, double y, double v);

struct GrowthFit {
  double slope = 0.0;
  double intercept = 0.0;
  double residual = 0.0;
};

// Least squares of log phi_k^nu(2iy, 2iv) against 2 sqrt(2k+n) rho, n = nu+1,
// for k in [k_lo, k_hi] (>= 10 values). At rho = 0 the regressor is
// 2 sqrt(2k+n) itself.
GrowthFit laguerre_growth_fit(int nu, double rho, int k_lo, int k_hi);

}  // namespace uplab::heisenberg
