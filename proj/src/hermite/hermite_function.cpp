#include "uplab/hermite/hermite_function.hpp"

#include <cmath>
#include <stdexcept>

#include "uplab/core/numeric.hpp"

namespace uplab::hermite {

namespace {
constexpr double kRescaleAt = 1e150;
}

template <class T>
HermiteTable<T> hermite_table(int max_order, T x) {
  if (max_order < 0) throw std::invalid_argument("hermite_table: negative order");
  HermiteTable<T> t;
  t.mantissa.resize(max_order + 1);
  t.log_scale = -x * x / 2.0 - 0.25 * std::log(kPi);
  t.mantissa[0] = T(1.0);
  if (max_order >= 1) t.mantissa[1] = std::sqrt(2.0) * x;
  for (int k = 1; k < max_order; ++k) {
    const double kk = k;
    T next = std::sqrt(2.0 / (kk + 1.0)) * x * t.mantissa[k] - std::sqrt(kk / (kk + 1.0)) * t.mantissa[k - 1];
    t.mantissa[k + 1] = next;
    if (std::abs(next) > kRescaleAt) {
      for (int j = 0; j <= k + 1; ++j) t.mantissa[j] /= kRescaleAt;
      t.log_scale += std::log(kRescaleAt);
    }
  }
  return t;
}

template HermiteTable<double> hermite_table<double>(int, double);
template HermiteTable<cplx> hermite_table<cplx>(int, cplx);

HermiteValue hermite_function(int k, double x) {
  auto t = hermite_table(k, x);
  double m = t.mantissa[k];
  if (m == 0.0) return {0.0, false};
  double logv = std::log(std::abs(m)) + t.log_scale;
  if (logv < -745.0) return {0.0, true};
  return {m * std::exp(t.log_scale), false};
}

HermiteValue hermite_eval(const MultiIndex& alpha, std::span<const double> x) {
  if (static_cast<int>(x.size()) != alpha.dim()) throw std::invalid_argument("hermite_eval: dimension mismatch");
  double logv = 0.0, sign = 1.0;
  for (int j = 0; j < alpha.dim(); ++j) {
    auto t = hermite_table(alpha[j], x[j]);
    double m = t.mantissa[alpha[j]];
    if (m == 0.0) return {0.0, false};
    sign *= m < 0 ? -1.0 : 1.0;
    logv += std::log(std::abs(m)) + t.log_scale;
  }
  if (logv < -745.0) return {0.0, true};
  return {sign * std::exp(logv), false};
}

cplx hermite_eval(const MultiIndex& alpha, std::span<const cplx> z) {
  if (static_cast<int>(z.size()) != alpha.dim()) throw std::invalid_argument("hermite_eval: dimension mismatch");
  cplx mant = 1.0, log_scale = 0.0;
  for (int j = 0; j < alpha.dim(); ++j) {
    auto t = hermite_table(alpha[j], z[j]);
    mant *= t.mantissa[alpha[j]];
    log_scale += t.log_scale;
  }
  return mant * std::exp(log_scale);
}

}  // namespace uplab::hermite
