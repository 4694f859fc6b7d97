#include "uplab/fmodel/test_function.hpp"

#include <cmath>
#include <stdexcept>

#include "uplab/core/numeric.hpp"
#include "uplab/fmodel/transforms.hpp"

namespace uplab::fmodel {

TestFunction::TestFunction(SampledFunction s) : rep_(std::move(s)) {
  const auto& sf = std::get<SampledFunction>(rep_);
  if (sf.dim < 1 || !sf.eval) throw std::invalid_argument("SampledFunction: needs a dimension and an evaluator");
}

int TestFunction::dim() const {
  return std::visit([](const auto& r) -> int {
    if constexpr (std::is_same_v<std::decay_t<decltype(r)>, SampledFunction>)
      return r.dim;
    else
      return r.dim();
  }, rep_);
}

cplx TestFunction::operator()(std::span<const double> x) const {
  if (auto e = hermite()) return (*e)(x);
  if (auto p = poly_gaussian()) return (*p)(x);
  return sampled()->eval(x);
}

double TestFunction::log_abs(std::span<const double> x) const {
  if (auto e = hermite()) return e->log_abs(x);
  if (auto p = poly_gaussian()) return p->log_abs(x);
  const auto* s = sampled();
  double r2 = 0;
  for (double xi : x) r2 += xi * xi;
  const double bound = s->decay.log_bound(std::sqrt(r2));
  if (s->log_noise_floor && bound < *s->log_noise_floor + 8.0 * std::numbers::ln10) return bound;
  double v = std::abs(s->eval(x));
  double lv = v > 0 ? std::log(v) : -kInf;
  return std::min(lv, bound);
}

DecayBound TestFunction::decay_bound() const {
  if (auto e = hermite()) return hermite_to_poly_gaussian(*e).decay_bound();
  if (auto p = poly_gaussian()) return p->decay_bound();
  return sampled()->decay;
}

bool TestFunction::exact_fourier() const {
  if (hermite()) return true;
  if (auto p = poly_gaussian()) return !p->chirped();
  return false;
}

}  // namespace uplab::fmodel
