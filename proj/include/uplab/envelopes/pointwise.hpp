#pragma once

#include <span>
#include <string>
#include <vector>

#include "uplab/hermite/expansion.hpp"

namespace uplab::envelopes {

// Constant C1 in |f(x)| <= C1 e^{-tanh(s)|x|^2/2} for f with |c_alpha| <= C e^{-(2|alpha|+n)t/2}:
// Cauchy-Schwarz against the Mehler kernel on the diagonal,
//   C1 = C (2 sinh(t-s))^{-n/2} e^{-ns/2} pi^{-n/4} (1 - e^{-4s})^{-n/4},
// and at s = 0 the uniform bound C pi^{-n/4} (2 sinh(t/2))^{-n}. Needs 0 <= s < t.
double pointwise_constant(double C, double t, double s, int n);

double pointwise_gaussian_bound(double C, double t, double s, std::span<const double> x);

struct PointwiseVerification {
  bool coefficients_dominated = false;  // |c_alpha| <= C e^{-(2|alpha|+n)t/2} for every alpha
  double max_ratio = 0.0;               // max |f(x)| / bound over the grid
  bool passed = false;                  // both of the above, ratio <= 1
};

PointwiseVerification verify_pointwise_bound(const hermite::HermiteExpansion& f, double C, double t, double s,
                                             const std::vector<std::vector<double>>& grid);

enum class HardyRegime { OnlyZero, OnlyGaussian, InfiniteFamily };

std::string to_string(HardyRegime r);

// ab > 1/4, = 1/4 (within 1e-12), < 1/4. ab <= 0 throws std::domain_error.
HardyRegime hardy_regime(double ab);

}  // namespace uplab::envelopes
