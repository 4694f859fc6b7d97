#include "uplab/hermite/mehler.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "uplab/core/numeric.hpp"
#include "uplab/hermite/hermite_function.hpp"

namespace uplab::hermite {
namespace {

void check(double r, std::span<const double> x, std::span<const double> y) {
  if (!(std::abs(r) < 1.0)) throw std::domain_error("Mehler kernel: need |r| < 1");
  if (x.size() != y.size() || x.empty()) throw std::invalid_argument("Mehler kernel: dimension mismatch");
}

}  // namespace

double mehler_kernel(double r, std::span<const double> x, std::span<const double> y) {
  check(r, x, y);
  const double n = static_cast<double>(x.size());
  double xx = 0, yy = 0, xy = 0;
  for (std::size_t j = 0; j < x.size(); ++j) {
    xx += x[j] * x[j];
    yy += y[j] * y[j];
    xy += x[j] * y[j];
  }
  const double q = 1.0 - r * r;
  double expo = -0.5 * (1.0 + r * r) / q * (xx + yy) + 2.0 * r / q * xy;
  return std::pow(kPi, -n / 2.0) * std::pow(q, -n / 2.0) * std::exp(expo);
}

double mehler_partial_sum(double r, std::span<const double> x, std::span<const double> y, int K) {
  check(r, x, y);
  if (K < 0) throw std::invalid_argument("mehler_partial_sum: K must be >= 0");
  const std::size_t n = x.size();
  // s[d] = sum over |alpha| = d of Phi_alpha(x) Phi_alpha(y), built one axis at a time
  std::vector<double> s(K + 1, 0.0);
  s[0] = 1.0;
  for (std::size_t j = 0; j < n; ++j) {
    auto tx = hermite_table(K, x[j]);
    auto ty = hermite_table(K, y[j]);
    double scale = std::exp(tx.log_scale + ty.log_scale);
    std::vector<double> prod(K + 1);
    for (int k = 0; k <= K; ++k) prod[k] = tx.mantissa[k] * ty.mantissa[k] * scale;
    std::vector<double> next(K + 1, 0.0);
    for (int d = 0; d <= K; ++d)
      for (int k = 0; k <= d; ++k) next[d] += s[d - k] * prod[k];
    s = std::move(next);
  }
  NeumaierSum acc;
  double rp = 1.0;
  for (int d = 0; d <= K; ++d) {
    acc.add(rp * s[d]);
    rp *= r;
  }
  return acc.value();
}

}  // namespace uplab::hermite
