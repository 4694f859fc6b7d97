#include "uplab/envelopes/pointwise.hpp"

#include <cmath>
#include <stdexcept>

#include "uplab/core/numeric.hpp"

namespace uplab::envelopes {

double pointwise_constant(double C, double t, double s, int n) {
  if (!(t > 0)) throw std::domain_error("pointwise bound: need t > 0");
  if (!(s >= 0.0 && s < t)) throw std::domain_error("pointwise bound: need 0 <= s < t");
  if (n < 1) throw std::domain_error("pointwise bound: dimension must be >= 1");
  const double dn = n;
  if (s == 0.0) return C * std::pow(kPi, -0.25 * dn) * std::pow(2.0 * std::sinh(0.5 * t), -dn);
  return C * std::pow(2.0 * std::sinh(t - s), -0.5 * dn) * std::exp(-0.5 * dn * s) * std::pow(kPi, -0.25 * dn) *
         std::pow(-std::expm1(-4.0 * s), -0.25 * dn);
}

double pointwise_gaussian_bound(double C, double t, double s, std::span<const double> x) {
  double r2 = 0;
  for (double xi : x) r2 += xi * xi;
  return pointwise_constant(C, t, s, static_cast<int>(x.size())) * std::exp(-0.5 * std::tanh(s) * r2);
}

PointwiseVerification verify_pointwise_bound(const hermite::HermiteExpansion& f, double C, double t, double s,
                                             const std::vector<std::vector<double>>& grid) {
  PointwiseVerification v;
  const double n = f.dim();
  v.coefficients_dominated = true;
  for (const auto& [alpha, c] : f)
    if (std::abs(c) > C * std::exp(-0.5 * (2.0 * alpha.order() + n) * t) * (1.0 + 1e-12))
      v.coefficients_dominated = false;
  for (const auto& x : grid) {
    if (static_cast<int>(x.size()) != f.dim()) throw std::invalid_argument("pointwise bound: grid dimension mismatch");
    v.max_ratio = std::max(v.max_ratio, std::abs(f(x)) / pointwise_gaussian_bound(C, t, s, x));
  }
  v.passed = v.coefficients_dominated && v.max_ratio <= 1.0;
  return v;
}

std::string to_string(HardyRegime r) {
  switch (r) {
    case HardyRegime::OnlyZero: return "only-zero";
    case HardyRegime::OnlyGaussian: return "only-gaussian";
    case HardyRegime::InfiniteFamily: return "infinite-family";
  }
  return "?";
}

HardyRegime hardy_regime(double ab) {
  if (!(ab > 0)) throw std::domain_error("hardy_regime: need ab > 0");
  if (std::abs(ab - 0.25) <= 1e-12) return HardyRegime::OnlyGaussian;
  return ab > 0.25 ? HardyRegime::OnlyZero : HardyRegime::InfiniteFamily;
}

}  // namespace uplab::envelopes
