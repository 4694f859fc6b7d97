#include "uplab/functional/scaling.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "uplab/core/numeric.hpp"
#include "uplab/functional/functionals.hpp"

namespace uplab::functional {

ScalingFit fit_scaling(std::vector<std::pair<double, double>> samples) {
  if (samples.size() < 3) throw std::invalid_argument("scaling fit: need at least 3 samples");
  std::vector<double> xs, ys;
  for (auto [a, v] : samples) {
    if (!(a > 0.0 && a < 1.0)) throw std::domain_error("scaling fit: grid must lie in (0,1)");
    if (!(v > 0.0) || !std::isfinite(v)) throw std::domain_error("scaling fit: values must be positive and finite");
    xs.push_back(-std::log1p(-a * a));
    ys.push_back(std::log(v));
  }
  LineFit lf = fit_line(xs, ys);
  ScalingFit out;
  out.samples = std::move(samples);
  out.exponent = lf.slope;
  out.residual = lf.max_residual;
  return out;
}

namespace {

template <class Eval>
ScalingFit sample_and_fit(const std::vector<double>& grid, Eval eval) {
  std::vector<std::pair<double, double>> samples;
  for (double a : grid) {
    FunctionalResult r = eval(a);
    if (!r.converged)
      throw std::runtime_error("scaling fit refused: sample at a=" + std::to_string(a) + " did not converge");
    samples.emplace_back(a, r.value);
  }
  return fit_scaling(std::move(samples));
}

}  // namespace

ScalingFit scaling_fit(const fmodel::TestFunction& f, const std::vector<double>& grid, double reltol) {
  return sample_and_fit(grid, [&](double a) { return ka_eval(f, a, reltol); });
}

ScalingFit scaling_fit(const fmodel::Polynomial& R, const fmodel::Polynomial& S, const std::vector<double>& grid,
                       double reltol) {
  return sample_and_fit(grid, [&](double a) { return e_poly_quad(R, S, a, reltol); });
}

}  // namespace uplab::functional
