#include "uplab/core/numeric.hpp"

#include <algorithm>
#include <stdexcept>

namespace uplab {

double log_sum_exp(std::span<const double> v) {
  double m = -kInf;
  for (double x : v) m = std::max(m, x);
  if (!std::isfinite(m)) return m;
  NeumaierSum s;
  for (double x : v) s.add(std::exp(x - m));
  return m + std::log(s.value());
}

double log_add(double a, double b) {
  if (a < b) std::swap(a, b);
  if (a == -kInf) return a;
  return a + std::log1p(std::exp(b - a));
}

double log_factorial(int k) {
  if (k < 0) throw std::domain_error("log_factorial: negative argument");
  return std::lgamma(static_cast<double>(k) + 1.0);
}

double log_bargmann_norm(std::span<const int> entries) {
  double acc = 0.5 * static_cast<double>(entries.size()) * std::log(kPi);
  for (int a : entries) acc += a * std::numbers::ln2 + log_factorial(a);
  return acc;
}

LineFit fit_line(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size() || xs.size() < 2)
    throw std::invalid_argument("fit_line: need at least two paired samples");
  const double n = static_cast<double>(xs.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  if (sxx <= 0) throw std::invalid_argument("fit_line: abscissae are all equal");
  LineFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  for (std::size_t i = 0; i < xs.size(); ++i)
    fit.max_residual =
        std::max(fit.max_residual, std::abs(ys[i] - (fit.slope * xs[i] + fit.intercept)));
  return fit;
}

double Rng::normal() {
  // Box-Muller, first variate only
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * u2);
}

}  // namespace uplab
