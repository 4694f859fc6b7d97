#include "uplab/heisenberg/schrodinger.hpp"

#include <cmath>
#include <stdexcept>

#include "uplab/core/numeric.hpp"
#include "uplab/fmodel/transforms.hpp"
#include "uplab/hermite/quadrature.hpp"

namespace uplab::heisenberg {

using fmodel::cplx;
using fmodel::DecayBound;
using fmodel::DecayKind;

GroupElement GroupElement::identity(int n) {
  std::vector<double> z(n, 0.0);
  return {z, z, z, z};
}

GroupElement GroupElement::real(std::vector<double> x, std::vector<double> u) {
  std::vector<double> z(x.size(), 0.0);
  return {std::move(x), std::move(u), z, z};
}

GroupElement GroupElement::imaginary(std::vector<double> y, std::vector<double> v) {
  std::vector<double> z(y.size(), 0.0);
  return {z, z, std::move(y), std::move(v)};
}

bool GroupElement::is_real() const {
  for (double a : y)
    if (a != 0.0) return false;
  for (double a : v)
    if (a != 0.0) return false;
  return true;
}

namespace {

double norm(const std::vector<double>& a) {
  double s = 0;
  for (double t : a) s += t * t;
  return std::sqrt(s);
}

void check(const GroupElement& g, int n) {
  if (g.dim() != n || static_cast<int>(g.u.size()) != n || static_cast<int>(g.y.size()) != n ||
      static_cast<int>(g.v.size()) != n)
    throw std::invalid_argument("schrodinger_apply: element dimension mismatch");
  for (const auto* vec : {&g.x, &g.u, &g.y, &g.v})
    for (double t : *vec)
      if (!std::isfinite(t)) throw std::invalid_argument("schrodinger_apply: non-finite element");
}

}  // namespace

fmodel::TestFunction schrodinger_apply(const fmodel::TestFunction& f, const GroupElement& g) {
  const int n = f.dim();
  check(g, n);
  fmodel::SampledFunction out;
  out.dim = n;
  if (g.is_real()) {
    double xu = 0;
    for (int j = 0; j < n; ++j) xu += g.x[j] * g.u[j];
    out.eval = [f, g, xu, n](std::span<const double> xi) {
      std::vector<double> s(n);
      double phase = 0.5 * xu;
      for (int j = 0; j < n; ++j) {
        s[j] = xi[j] + g.u[j];
        phase += g.x[j] * xi[j];
      }
      return std::polar(1.0, phase) * f(s);
    };
    // |f(xi+u)| with |xi+u|^2 >= |xi|^2/2 - |u|^2
    DecayBound b = f.decay_bound();
    const double du = norm(g.u);
    b.log_c += b.degree * std::log1p(du) + (b.kind == DecayKind::Gaussian ? b.rate * du * du : b.rate * du);
    if (b.kind == DecayKind::Gaussian) b.rate *= 0.5;
    out.decay = b;
    return fmodel::TestFunction(std::move(out));
  }
  auto e = f.hermite();
  if (!e) throw std::domain_error("schrodinger_apply: complex elements need a finite Hermite expansion");
  std::vector<cplx> X(n), U(n);
  cplx xu = 0.0;
  for (int j = 0; j < n; ++j) {
    X[j] = cplx(g.x[j], g.y[j]);
    U[j] = cplx(g.u[j], g.v[j]);
    xu += X[j] * U[j];
  }
  out.eval = [e = *e, X, U, xu, n](std::span<const double> xi) {
    std::vector<cplx> s(n);
    cplx phase = 0.5 * xu;
    for (int j = 0; j < n; ++j) {
      s[j] = xi[j] + U[j];
      phase += X[j] * xi[j];
    }
    return std::exp(cplx(0, 1) * phase) * e(std::span<const cplx>(s));
  };
  // f = Q e^{-|.|^2/2}: |f(xi+U)| <= |Q(xi+U)| e^{-|xi+u|^2/2 + |v|^2/2}, and
  // e^{|y||xi|} <= e^{|xi|^2/8 + 2|y|^2}, |xi+u|^2 >= |xi|^2/2 - |u|^2
  const fmodel::Polynomial Q = fmodel::hermite_to_polynomial(*e);
  const double dU = std::hypot(norm(g.u), norm(g.v));
  DecayBound b;
  b.kind = DecayKind::Gaussian;
  b.degree = Q.degree();
  b.rate = 0.125;
  b.log_c = std::log(std::max(Q.abs_coefficient_sum(), 1e-300)) + b.degree * std::log1p(dU) +
            0.5 * std::pow(norm(g.u), 2) + 0.5 * std::pow(norm(g.v), 2) + 2.0 * std::pow(norm(g.y), 2) +
            (cplx(0, 1) * 0.5 * xu).real();
  out.decay = b;
  return fmodel::TestFunction(std::move(out));
}

double l2_norm_squared(const fmodel::TestFunction& f, std::span<const double> centre, int nodes) {
  const int n = f.dim();
  if (static_cast<int>(centre.size()) != n) throw std::invalid_argument("l2_norm_squared: centre dimension mismatch");
  auto rule = hermite::gauss_hermite_rule(nodes);
  std::vector<int> idx(n, 0);
  std::vector<double> xi(n);
  NeumaierSum acc;
  for (;;) {
    double w = 1.0;
    for (int j = 0; j < n; ++j) {
      xi[j] = rule->nodes[idx[j]] + centre[j];
      w *= rule->plain[idx[j]];
    }
    acc.add(w * std::norm(f(xi)));
    int j = 0;
    while (j < n && ++idx[j] == nodes) idx[j++] = 0;
    if (j == n) break;
  }
  return acc.value();
}

HermiteExpansion poisson_semigroup(const HermiteExpansion& e, double t) {
  if (!(t >= 0.0)) throw std::domain_error("poisson_semigroup: need t >= 0");
  const double n = e.dim();
  return e.transformed([t, n](const hermite::MultiIndex& alpha, cplx c) {
    return c * std::exp(-t * std::sqrt(2.0 * alpha.order() + n));
  });
}

}  // namespace uplab::heisenberg
