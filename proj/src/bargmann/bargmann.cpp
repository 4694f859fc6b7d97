#include "uplab/bargmann/bargmann.hpp"

#include <cmath>
#include <stdexcept>

#include "uplab/core/numeric.hpp"
#include "uplab/fmodel/transforms.hpp"
#include "uplab/hermite/quadrature.hpp"

namespace uplab::bargmann {

cplx normalized_monomial(const MultiIndex& alpha, std::span<const cplx> z) {
  if (static_cast<int>(z.size()) != alpha.dim()) throw std::invalid_argument("normalized_monomial: dimension mismatch");
  cplx v = std::exp(-0.5 * log_bargmann_norm(alpha.entries()));
  for (int j = 0; j < alpha.dim(); ++j) v *= std::pow(z[j], alpha[j]);
  return v;
}

EntireFunctionHandle EntireFunctionHandle::exact(const HermiteExpansion& e) {
  EntireFunctionHandle h;
  h.dim_ = e.dim();
  h.exact_ = std::make_shared<const HermiteExpansion>(e);
  return h;
}

EntireFunctionHandle EntireFunctionHandle::quadrature(const fmodel::TestFunction& f, int nodes) {
  if (nodes < 1) throw std::invalid_argument("bargmann quadrature: need at least one node");
  const int n = f.dim();
  auto rule = hermite::gauss_hermite_rule(nodes);
  auto s = std::make_shared<Sampled>();
  std::vector<int> idx(n, 0);
  std::vector<double> xi(n);
  const double scale = std::pow(2.0, 0.5 * n);
  for (;;) {
    double w = scale;
    for (int j = 0; j < n; ++j) {
      xi[j] = std::numbers::sqrt2 * rule->nodes[idx[j]];
      w *= rule->weights[idx[j]];
    }
    cplx v = f(xi) * w;
    if (v != 0.0) {
      s->points.insert(s->points.end(), xi.begin(), xi.end());
      s->gw.push_back(v);
    }
    int j = 0;
    while (j < n && ++idx[j] == nodes) idx[j++] = 0;
    if (j == n) break;
  }
  EntireFunctionHandle h;
  h.dim_ = n;
  h.nodes_ = nodes;
  h.sampled_ = std::move(s);
  return h;
}

EntireFunctionHandle EntireFunctionHandle::of(const fmodel::TestFunction& f) {
  fmodel::TestFunction c = fmodel::canonical(f);
  if (auto e = c.hermite()) return exact(*e);
  return quadrature(c);
}

cplx EntireFunctionHandle::operator()(std::span<const cplx> z) const {
  if (static_cast<int>(z.size()) != dim_) throw std::invalid_argument("bargmann: dimension mismatch");
  if (exact_) {
    NeumaierSum re, im;
    for (const auto& [alpha, c] : *exact_) {
      cplx t = c * normalized_monomial(alpha, z);
      re.add(t.real());
      im.add(t.imag());
    }
    return {re.value(), im.value()};
  }
  const int n = dim_;
  cplx z2 = 0.0;
  for (cplx zj : z) z2 += zj * zj;
  cplx acc = 0.0;
  const std::size_t count = sampled_->gw.size();
  for (std::size_t i = 0; i < count; ++i) {
    cplx e = 0.0;
    for (int j = 0; j < n; ++j) e += z[j] * sampled_->points[i * n + j];
    acc += sampled_->gw[i] * std::exp(e);
  }
  return std::pow(kPi, -0.5 * n) * std::exp(-0.25 * z2) * acc;
}

BargmannValue bargmann_eval(const fmodel::TestFunction& f, std::span<const cplx> z, int nodes) {
  fmodel::TestFunction c = fmodel::canonical(f);
  if (auto e = c.hermite()) return {EntireFunctionHandle::exact(*e)(z), true, 0.0};
  cplx coarse = EntireFunctionHandle::quadrature(c, nodes)(z);
  cplx fine = EntireFunctionHandle::quadrature(c, 2 * nodes)(z);
  double err = std::abs(fine - coarse);
  return {fine, err <= 1e-10 * std::max(1.0, std::abs(fine)), err};
}

std::vector<std::vector<cplx>> polydisc_grid(int n, double radius, int k) {
  if (n < 1 || k < 1 || !(radius > 0)) throw std::invalid_argument("polydisc_grid: bad arguments");
  std::vector<cplx> axis;
  for (int i = 0; i < k; ++i)
    for (int l = 0; l < k; ++l) axis.push_back(std::polar(radius * (i + 1) / k, 2.0 * kPi * l / k));
  std::vector<std::vector<cplx>> grid{{}};
  for (int j = 0; j < n; ++j) {
    std::vector<std::vector<cplx>> next;
    for (const auto& g : grid)
      for (cplx a : axis) {
        auto h = g;
        h.push_back(a);
        next.push_back(std::move(h));
      }
    grid = std::move(next);
  }
  return grid;
}

double duality_check(const fmodel::TestFunction& f, const std::vector<std::vector<cplx>>& grid,
                     BargmannMethod method, int nodes) {
  auto ft = fmodel::fourier(f);
  if (!ft.exact) throw std::domain_error("duality_check: needs an exactly transformable function");
  EntireFunctionHandle bf, bhat;
  if (method == BargmannMethod::Exact) {
    bf = EntireFunctionHandle::of(f);
    bhat = EntireFunctionHandle::of(ft.transform);
    if (!bf.is_exact() || !bhat.is_exact()) throw std::domain_error("duality_check: exact path needs Hermite-finite input");
  } else {
    bf = EntireFunctionHandle::quadrature(f, nodes);
    bhat = EntireFunctionHandle::quadrature(ft.transform, nodes);
  }
  double worst = 0.0;
  for (const auto& z : grid) {
    std::vector<cplx> rotated(z.size());
    for (std::size_t j = 0; j < z.size(); ++j) rotated[j] = cplx(0, -1) * z[j];
    worst = std::max(worst, std::abs(bf(rotated) - bhat(z)));
  }
  return worst;
}

}  // namespace uplab::bargmann
