#pragma once

#include "uplab/heisenberg/schrodinger.hpp"

namespace uplab::heisenberg {

struct KAverageReport {
  double lhs = 0.0;  // circle average of ||pi(k.(iy, iv)) f||^2
  double rhs = 0.0;  // sum_k |c_k|^2 phi_k^0(2iy, 2iv)
  double rel_dev = 0.0;
  bool converged = false;  // inner rule agrees with its doubled version to 1e-12
};

// n = 1, x = u = 0. The circle acts by rotation on (y, v); `angles` trapezoid
// points, inner integral by Gauss-Hermite centred where the weight peaks.
// Needs K >= deg f.
KAverageReport kaverage_identity_check(const HermiteExpansion& f, double y, double v, int K, int angles = 64,
                                       int nodes = 64);

}  // namespace uplab::heisenberg
