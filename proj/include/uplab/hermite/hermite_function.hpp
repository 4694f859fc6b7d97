#pragma once

#include <complex>
#include <span>
#include <vector>

#include "uplab/hermite/multi_index.hpp"

namespace uplab::hermite {

using cplx = std::complex<double>;

// h_0..h_K at one point, stored as h_k = mantissa[k] * exp(log_scale). The
// normalized recurrence runs on the mantissas and is rescaled whenever they
// grow, so neither factorials nor e^{-x^2/2} ever leave double range.
template <class T>
struct HermiteTable {
  std::vector<T> mantissa;
  T log_scale{};
  T value(int k) const { return mantissa[k] * std::exp(log_scale); }
};

template <class T>
HermiteTable<T> hermite_table(int max_order, T x);

extern template HermiteTable<double> hermite_table<double>(int, double);
extern template HermiteTable<cplx> hermite_table<cplx>(int, cplx);

struct HermiteValue {
  double value = 0.0;
  bool underflow = false;  // true when the exact value is below double range; value is then 0
};

// Normalized 1-D Hermite function h_k(x).
HermiteValue hermite_function(int k, double x);

// Phi_alpha(x) = prod_j h_{alpha_j}(x_j).
HermiteValue hermite_eval(const MultiIndex& alpha, std::span<const double> x);
cplx hermite_eval(const MultiIndex& alpha, std::span<const cplx> z);

}  // namespace uplab::hermite
