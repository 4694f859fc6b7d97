#include "uplab/bargmann/product_estimate.hpp"

#include <cmath>
#include <stdexcept>

#include "uplab/core/numeric.hpp"
#include "uplab/fmodel/transforms.hpp"
#include "uplab/functional/functionals.hpp"

namespace uplab::bargmann {

ProductEstimateReport product_estimate_check(const fmodel::TestFunction& f, double a,
                                             const std::vector<std::vector<cplx>>& grid, std::optional<double> ka,
                                             double ka_reltol) {
  if (!(a >= 0.0 && a < 1.0)) throw std::domain_error("product estimate: need 0 <= a < 1");
  ProductEstimateReport rep;
  if (ka) {
    rep.ka = *ka;
    rep.ka_converged = true;
  } else {
    auto r = functional::ka_eval(f, a, ka_reltol);
    rep.ka = r.value;
    rep.ka_converged = r.converged;
  }
  const int n = f.dim();
  auto ft = fmodel::fourier(f);
  EntireFunctionHandle bf = EntireFunctionHandle::of(f), bhat = EntireFunctionHandle::of(ft.transform);
  const double q = (1.0 - a) / (1.0 + a);
  const double log_pref = -n * std::log(kPi) + std::log(rep.ka);
  for (const auto& z : grid) {
    double x2 = 0, y2 = 0;
    for (cplx zj : z) {
      x2 += zj.real() * zj.real();
      y2 += zj.imag() * zj.imag();
    }
    double lhs = std::abs(bf(z)) * std::abs(bhat(z));
    double log_rhs = log_pref + 0.5 * (y2 + q * x2);
    double ratio = lhs > 0 ? std::exp(std::log(lhs) - log_rhs) : 0.0;
    rep.ratios.push_back(ratio);
    rep.max_ratio = std::max(rep.max_ratio, ratio);
  }
  return rep;
}

std::vector<std::vector<cplx>> lattice_grid(int n, double half_width, int k) {
  if (n < 1 || k < 2 || !(half_width > 0)) throw std::invalid_argument("lattice_grid: bad arguments");
  std::vector<cplx> axis;
  for (int i = 0; i < k; ++i)
    for (int l = 0; l < k; ++l)
      axis.emplace_back(-half_width + 2.0 * half_width * i / (k - 1), -half_width + 2.0 * half_width * l / (k - 1));
  std::vector<std::vector<cplx>> grid{{}};
  for (int j = 0; j < n; ++j) {
    std::vector<std::vector<cplx>> next;
    for (const auto& g : grid)
      for (cplx v : axis) {
        auto h = g;
        h.push_back(v);
        next.push_back(std::move(h));
      }
    grid = std::move(next);
  }
  return grid;
}

}  // namespace uplab::bargmann
