#pragma once

#include <span>

namespace uplab::hermite {

// Closed-form kernel sum_alpha r^{|alpha|} Phi_alpha(x) Phi_alpha(y), |r| < 1.
double mehler_kernel(double r, std::span<const double> x, std::span<const double> y);

// Same sum truncated to |alpha| <= K.
double mehler_partial_sum(double r, std::span<const double> x, std::span<const double> y, int K);

}  // namespace uplab::hermite
