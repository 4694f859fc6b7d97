#pragma once

#include <optional>
#include <vector>

#include "uplab/bargmann/bargmann.hpp"

namespace uplab::bargmann {

struct ProductEstimateReport {
  double ka = 0.0;
  bool ka_converged = false;
  std::vector<double> ratios;  // one per grid point
  double max_ratio = 0.0;
};

// |Bf(z) B(f^)(z)| / (pi^{-n} K_a(f) exp((|y|^2 + ((1-a)/(1+a)) |x|^2) / 2)), z = x + iy.
// A known K_a can be passed in; otherwise it is computed.
ProductEstimateReport product_estimate_check(const fmodel::TestFunction& f, double a,
                                             const std::vector<std::vector<cplx>>& grid,
                                             std::optional<double> ka = std::nullopt, double ka_reltol = 1e-9);

// Square lattice x, y in [-half_width, half_width], k points per side, per axis.
std::vector<std::vector<cplx>> lattice_grid(int n, double half_width, int k);

}  // namespace uplab::bargmann
