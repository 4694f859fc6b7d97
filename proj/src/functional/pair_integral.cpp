#include "uplab/functional/pair_integral.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "uplab/core/adaptive.hpp"
#include "uplab/core/numeric.hpp"
#include "uplab/core/parallel.hpp"
#include "uplab/fmodel/transforms.hpp"
#include "uplab/hermite/quadrature.hpp"

namespace uplab::functional {

using fmodel::DecayBound;
using fmodel::DecayKind;

Marginal marginal_of(const fmodel::TestFunction& f) {
  Marginal m;
  m.dim = f.dim();
  m.log_abs = [f](std::span<const double> x) { return f.log_abs(x); };
  m.decay = f.decay_bound();
  if (m.dim == 1) {
    if (auto e = f.hermite()) m.breakpoints = fmodel::near_real_roots(fmodel::hermite_to_polynomial(*e));
    if (auto p = f.poly_gaussian()) m.breakpoints = fmodel::near_real_roots(p->poly());
  }
  return m;
}

namespace {

// Bound on log|w(x)| + log|v(y)| + a|x||y| in terms of rho = |(x, y)|.
DecayBound joint_bound(const Marginal& w, const Marginal& v, double a) {
  if (w.decay.kind != DecayKind::Gaussian || v.decay.kind != DecayKind::Gaussian)
    throw std::domain_error("pair integral: Gaussian decay descriptors required");
  Eigen::Matrix2d q;
  q << w.decay.rate, -0.5 * a, -0.5 * a, v.decay.rate;
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(q, Eigen::EigenvaluesOnly);
  DecayBound b;
  b.kind = DecayKind::Gaussian;
  b.log_c = w.decay.log_c + v.decay.log_c;
  b.degree = w.decay.degree + v.decay.degree;
  b.rate = es.eigenvalues().minCoeff();
  return b;
}

double truncation_radius(const DecayBound& joint) {
  if (!(joint.rate > 0))
    throw std::domain_error("pair integral: decay too weak for the coupling; integral not finite");
  double top = joint.log_c;
  if (joint.degree > 0) top = joint.log_bound(std::sqrt(joint.degree / (2.0 * joint.rate)));
  return std::max(2.0, joint.radius_below(top - 50.0));
}

FunctionalResult finish(double log_value, double rel_error, bool converged, int depth, double reltol) {
  FunctionalResult r;
  r.log_value = log_value;
  r.value = std::exp(log_value);
  r.error = r.value * rel_error;
  r.converged = converged && rel_error <= reltol;
  r.depth = depth;
  return r;
}

FunctionalResult pair_1d(const Marginal& w, const Marginal& v, double a, const PairOptions& opts) {
  double radius = opts.box_radius;
  if (radius <= 0) radius = truncation_radius(joint_bound(w, v, a));
  const double N = opts.weight_power;
  const double inner_tol = 0.1 * opts.reltol;
  const double peak_coef = v.decay.rate > 0 ? a / (2.0 * v.decay.rate) : 1.0;

  double worst_inner = 0.0;
  bool inner_ok = true;
  int depth = 0;
  AdaptiveOptions inner_opts;
  inner_opts.reltol = inner_tol;
  auto inner = [&](double x) {
    const double ax = std::abs(x);
    std::vector<double> bp = v.breakpoints;
    if (opts.split_orthants) {
      bp.push_back(0.0);
      bp.push_back(peak_coef * ax);
      bp.push_back(-peak_coef * ax);
    }
    auto lf = [&](double y) {
      double l = v.log_abs(std::span<const double>(&y, 1)) + a * ax * std::abs(y);
      if (N != 0.0) l -= N * std::log1p(ax + std::abs(y));
      return l;
    };
    LogIntegral r = integrate_log(lf, -radius, radius, bp, inner_opts);
    worst_inner = std::max(worst_inner, r.rel_error);
    inner_ok = inner_ok && r.converged;
    depth = std::max(depth, r.depth);
    return r.log_value;
  };
  auto outer = [&](double x) {
    double lw = w.log_abs(std::span<const double>(&x, 1));
    if (lw == -kInf) return -kInf;
    return lw + inner(x);
  };
  std::vector<double> bp = w.breakpoints;
  if (opts.split_orthants) bp.push_back(0.0);
  AdaptiveOptions outer_opts;
  outer_opts.reltol = 0.5 * opts.reltol;
  LogIntegral r = integrate_log(outer, -radius, radius, bp, outer_opts);
  depth = std::max(depth, r.depth);
  double rel = r.rel_error + worst_inner;
  return finish(r.log_value, rel, r.converged && inner_ok, depth, opts.reltol);
}

// n = 2 via slices: with x = r w(theta), the y-integral only sees s = y.w(theta),
// so K = int_0^pi dtheta int dr |r| w(r w) int ds G(s) e^{a|r s|}, where
// G(s) = int v(s w + t w_perp) dt.
double pair_2d_level(const Marginal& w, const Marginal& v, double a, double radius, double width, int angles,
                     double reltol, bool& ok, int& depth) {
  auto srule = hermite::composite_legendre(-radius, radius, width, 8, {0.0});
  std::vector<double> per_angle(angles);
  std::vector<char> per_ok(angles, 1);
  std::vector<int> per_depth(angles, 0);
  parallel_for(static_cast<std::size_t>(angles), [&](std::size_t k) {
    const double th = (k + 0.5) * kPi / angles;
    const double c = std::cos(th), s = std::sin(th);
    std::vector<double> log_g(srule.size());
    for (std::size_t j = 0; j < srule.size(); ++j) {
      const double sj = srule.nodes[j];
      const double half = std::sqrt(std::max(radius * radius - sj * sj, 0.0));
      if (half < 1e-12) {
        log_g[j] = -kInf;
        continue;
      }
      auto trule = hermite::composite_legendre(-half, half, width, 8, {0.0});
      std::vector<double> terms(trule.size());
      for (std::size_t i = 0; i < trule.size(); ++i) {
        const double t = trule.nodes[i];
        double y[2] = {sj * c - t * s, sj * s + t * c};
        terms[i] = std::log(trule.weights[i]) + v.log_abs(y);
      }
      log_g[j] = std::log(srule.weights[j]) + log_sum_exp(terms);
    }
    std::vector<double> buf(srule.size());
    auto lf = [&](double r) {
      if (r == 0.0) return -kInf;
      double x[2] = {r * c, r * s};
      double lw = w.log_abs(x);
      if (lw == -kInf) return -kInf;
      for (std::size_t j = 0; j < srule.size(); ++j) buf[j] = log_g[j] + a * std::abs(r * srule.nodes[j]);
      return std::log(std::abs(r)) + lw + log_sum_exp(buf);
    };
    AdaptiveOptions o;
    o.reltol = 0.1 * reltol;
    LogIntegral li = integrate_log(lf, -radius, radius, {0.0}, o);
    per_angle[k] = li.log_value;
    per_ok[k] = li.converged;
    per_depth[k] = li.depth;
  });
  for (int k = 0; k < angles; ++k) {
    ok = ok && per_ok[k];
    depth = std::max(depth, per_depth[k]);
  }
  return std::log(kPi / angles) + log_sum_exp(per_angle);
}

FunctionalResult pair_2d(const Marginal& w, const Marginal& v, double a, const PairOptions& opts) {
  if (opts.weight_power != 0.0) throw std::domain_error("pair integral: polynomial weight is one-dimensional only");
  double radius = opts.box_radius;
  if (radius <= 0) radius = truncation_radius(joint_bound(w, v, a));
  double width = 0.5;
  int angles = 16;
  bool ok = true;
  int depth = 0;
  double prev = pair_2d_level(w, v, a, radius, width, angles, opts.reltol, ok, depth);
  double rel = kInf, cur = prev;
  for (int level = 0; level < 3; ++level) {
    width *= 0.5;
    angles *= 2;
    cur = pair_2d_level(w, v, a, radius, width, angles, opts.reltol, ok, depth);
    rel = std::abs(std::expm1(prev - cur));
    if (rel <= opts.reltol) break;
    prev = cur;
  }
  return finish(cur, rel, ok, depth, opts.reltol);
}

}  // namespace

FunctionalResult pair_integral(const Marginal& w, const Marginal& v, double a, const PairOptions& opts) {
  if (!(a >= 0.0)) throw std::domain_error("pair integral: need a >= 0");
  if (w.dim != v.dim) throw std::invalid_argument("pair integral: dimension mismatch");
  if (w.dim == 1) return pair_1d(w, v, a, opts);
  if (w.dim == 2) return pair_2d(w, v, a, opts);
  throw std::domain_error("pair integral: only n = 1 and n = 2 are supported");
}

}  // namespace uplab::functional
