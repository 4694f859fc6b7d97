#pragma once

#include <utility>
#include <vector>

#include "uplab/fmodel/polynomial.hpp"
#include "uplab/fmodel/test_function.hpp"

namespace uplab::functional {

struct ScalingFit {
  std::vector<std::pair<double, double>> samples;  // (a, value)
  double exponent = 0.0;  // N in value ~ (1-a^2)^{-N}
  double residual = 0.0;  // max |log deviation| from the fitted line
};

inline const std::vector<double> kDefaultScalingGrid{0.9, 0.99, 0.999};

// Least squares of log(value) against -log(1-a^2). Needs >= 3 samples,
// a in (0,1) and positive values.
ScalingFit fit_scaling(std::vector<std::pair<double, double>> samples);

// Throw std::runtime_error when any functional sample fails to converge.
ScalingFit scaling_fit(const fmodel::TestFunction& f, const std::vector<double>& grid = kDefaultScalingGrid,
                       double reltol = 1e-9);
ScalingFit scaling_fit(const fmodel::Polynomial& R, const fmodel::Polynomial& S,
                       const std::vector<double>& grid = kDefaultScalingGrid, double reltol = 1e-9);

}  // namespace uplab::functional
