#include "uplab/heisenberg/laguerre.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "uplab/core/numeric.hpp"

namespace uplab::heisenberg {

LaguerreValue laguerre(int k, int nu, double x) {
  if (k < 0 || nu < 0) throw std::domain_error("laguerre: need k, nu >= 0");
  LaguerreValue out{k, nu, x, 1.0, 0.0, 1};
  double prev = 0.0, cur = 1.0, log_scale = 0.0;
  for (int j = 0; j < k; ++j) {
    double next = ((2.0 * j + 1.0 + nu - x) * cur - (j + nu) * prev) / (j + 1.0);
    prev = cur;
    cur = next;
    double m = std::abs(cur);
    if (m > 1e100) {
      prev /= m;
      cur /= m;
      log_scale += std::log(m);
    }
  }
  out.sign = cur < 0 ? -1 : 1;
  out.log_abs = cur == 0.0 ? -kInf : std::log(std::abs(cur)) + log_scale;
  out.value = log_scale == 0.0 ? cur : out.sign * std::exp(out.log_abs);
  return out;
}

double laguerre_phi(int k, int nu, double y, double v) {
  const double r2 = y * y + v * v;
  return laguerre(k, nu, 0.5 * r2).value * std::exp(-0.25 * r2);
}

double log_laguerre_phi_imag(int k, int nu, double y, double v) {
  const double r2 = y * y + v * v;
  return laguerre(k, nu, -2.0 * r2).log_abs + r2;
}

double laguerre_phi_imag(int k, int nu, double y, double v) { return std::exp(log_laguerre_phi_imag(k, nu, y, v)); }

GrowthFit laguerre_growth_fit(int nu, double rho, int k_lo, int k_hi) {
  if (!(rho >= 0.0)) throw std::domain_error("laguerre_growth_fit: need rho >= 0");
  if (k_lo < 0 || k_hi - k_lo + 1 < 10) throw std::invalid_argument("laguerre_growth_fit: need at least 10 degrees");
  const double n = nu + 1.0;
  std::vector<double> xs, ys;
  for (int k = k_lo; k <= k_hi; ++k) {
    double scale = 2.0 * std::sqrt(2.0 * k + n);
    xs.push_back(rho > 0 ? scale * rho : scale);
    ys.push_back(log_laguerre_phi_imag(k, nu, rho, 0.0));
  }
  LineFit lf = fit_line(xs, ys);
  return {lf.slope, lf.intercept, lf.max_residual};
}

}  // namespace uplab::heisenberg
