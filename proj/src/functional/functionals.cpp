#include "uplab/functional/functionals.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "uplab/core/adaptive.hpp"
#include "uplab/core/numeric.hpp"
#include "uplab/fmodel/transforms.hpp"

namespace uplab::functional {

using fmodel::DecayBound;
using fmodel::DecayKind;
using fmodel::Polynomial;
using fmodel::TestFunction;

FunctionalResult ka_eval(const TestFunction& f, double a, double reltol, bool split_orthants) {
  if (!(a >= 0.0 && a < 1.0)) throw std::domain_error("ka_eval: need 0 <= a < 1");
  auto ft = fmodel::fourier(f);
  PairOptions opts;
  opts.reltol = reltol;
  opts.split_orthants = split_orthants;
  FunctionalResult r = pair_integral(marginal_of(f), marginal_of(ft.transform), a, opts);
  if (!ft.converged) r.converged = false;
  return r;
}

double e_monomial_bound(int j, int k, double a) {
  if (!(a >= 0.0 && a < 1.0)) throw std::domain_error("e_monomial_bound: need 0 <= a < 1");
  if (j < 0 || k < 0) throw std::invalid_argument("e_monomial_bound: negative exponent");
  const double log_q = std::log1p(-a * a);
  std::vector<double> terms;
  for (int l = 0; l <= k; ++l) {
    if (l > 0 && a == 0.0) break;
    double t = std::lgamma(k + 1.0) - std::lgamma(l + 1.0) - std::lgamma(k - l + 1.0) +
               std::lgamma((j + l + 1) / 2.0) + std::lgamma((k - l + 1) / 2.0) - 0.5 * (j + l + 1) * log_q;
    if (l > 0) t += l * std::log(a);
    terms.push_back(t);
  }
  return std::exp(0.5 * (j + k + 2) * std::numbers::ln2 + log_sum_exp(terms));
}

namespace {

Marginal polynomial_marginal(const Polynomial& P) {
  Marginal m;
  m.dim = P.dim();
  m.log_abs = [P](std::span<const double> x) {
    double p = std::abs(P(x));
    if (p == 0.0) return -kInf;
    double r2 = 0;
    for (double xi : x) r2 += xi * xi;
    return std::log(p) - 0.5 * r2;
  };
  m.decay = fmodel::PolyGaussian::standard(P).decay_bound();
  if (m.dim == 1) m.breakpoints = fmodel::near_real_roots(P);
  return m;
}

}  // namespace

FunctionalResult e_poly_quad(const Polynomial& R, const Polynomial& S, double a, double reltol, bool split_orthants) {
  if (!(a >= 0.0 && a < 1.0)) throw std::domain_error("e_poly_quad: need 0 <= a < 1");
  if (R.is_zero() || S.is_zero()) {
    FunctionalResult z;
    z.value = 0.0;
    z.log_value = -kInf;
    z.converged = true;
    return z;
  }
  PairOptions opts;
  opts.reltol = reltol;
  opts.split_orthants = split_orthants;
  return pair_integral(polynomial_marginal(R), polynomial_marginal(S), a, opts);
}

FunctionalResult weighted_bdj(const TestFunction& f_in, double N, double reltol) {
  if (f_in.dim() != 1) throw std::domain_error("weighted_bdj: one-dimensional inputs only");
  if (!(N >= 0.0)) throw std::domain_error("weighted_bdj: need N >= 0");
  TestFunction f = f_in;
  if (auto p = f.poly_gaussian()) {
    // work in the coordinates where the real quadratic part is |x|^2/2
    double delta = std::sqrt(0.5 / p->A()(0, 0));
    f = fmodel::dilate(f, delta);
  }
  auto ft = fmodel::fourier(f);
  Marginal w = marginal_of(f), v = marginal_of(ft.transform);

  PairOptions opts;
  opts.reltol = std::min(1e-7, 0.01 * reltol);
  opts.weight_power = N;
  std::vector<double> logs;
  int growth_run = 0;
  FunctionalResult out;
  double radius = 2.0;
  for (int k = 0; k <= 14; ++k, radius *= 2.0) {
    opts.box_radius = radius;
    FunctionalResult box = pair_integral(w, v, 1.0, opts);
    out.depth = std::max(out.depth, box.depth);
    logs.push_back(box.log_value);
    const std::size_t m = logs.size();
    if (m >= 2) {
      growth_run = (logs[m - 1] - logs[m - 2] > std::numbers::ln2) ? growth_run + 1 : 0;
      if (growth_run >= 4) {
        out.divergent = true;
        out.value = kInf;
        out.log_value = kInf;
        out.error = kInf;
        return out;
      }
    }
    if (m >= 3) {
      // increments relative to the current box sum
      double s1 = std::exp(logs[m - 3] - logs[m - 1]), s2 = std::exp(logs[m - 2] - logs[m - 1]);
      double d_new = 1.0 - s2, d_old = s2 - s1;
      double tail = kInf;
      if (std::abs(d_new) <= 0.1 * reltol) {
        tail = std::abs(d_new);
      } else if (d_new > 0 && d_old > 0 && d_new < d_old) {
        double q = d_new / d_old;
        tail = d_new * q / (1.0 - q);
      }
      if (tail <= reltol) {
        out.converged = true;
        out.log_value = logs[m - 1] + std::log1p(tail);
        out.value = std::exp(out.log_value);
        out.error = out.value * tail;
        return out;
      }
    }
  }
  out.inconclusive = true;
  out.log_value = logs.back();
  out.value = std::exp(logs.back());
  out.error = kInf;
  return out;
}

namespace {

// R beyond which log_c + p log(1+r) - decay(r) + t r stays below `drop` under its maximum
double moment_radius(const DecayBound& b, double t, double drop) {
  auto g = [&](double r) {
    double d = b.kind == DecayKind::Gaussian ? b.rate * r * r : b.rate * r;
    return b.log_c + b.degree * std::log1p(r) - d + t * r;
  };
  if (b.kind == DecayKind::Exponential && !(b.rate > t))
    throw std::domain_error("exp_moment: exponential decay rate does not exceed t");
  if (!(b.rate > 0)) throw std::domain_error("exp_moment: decay descriptor has no decay");
  // g is concave: golden-section for the top, then bisection outward
  double lo = 0.0, hi = 1.0;
  while (g(2.0 * hi) > g(hi)) hi *= 2.0;
  hi *= 2.0;
  for (int it = 0; it < 200; ++it) {
    double m1 = lo + (hi - lo) / 3.0, m2 = hi - (hi - lo) / 3.0;
    (g(m1) < g(m2) ? lo : hi) = (g(m1) < g(m2) ? m1 : m2);
  }
  const double top = g(lo), level = top - drop;
  double a = lo, c = std::max(2.0 * lo, 1.0);
  while (g(c) > level) c *= 2.0;
  for (int it = 0; it < 100; ++it) {
    double mid = 0.5 * (a + c);
    (g(mid) > level ? a : c) = mid;
  }
  return std::max(c, 1.0);
}

}  // namespace

FunctionalResult exp_moment(const TestFunction& f, double t, MomentOrder order, double reltol) {
  if (!(t >= 0.0)) throw std::domain_error("exp_moment: need t >= 0");
  const double tt = order == MomentOrder::Linear ? t : 0.0;
  const DecayBound b = f.decay_bound();
  const double radius = moment_radius(b, tt, 50.0);
  AdaptiveOptions o;
  o.reltol = reltol;
  if (f.dim() == 1) {
    std::vector<double> bp{0.0};
    Marginal m = marginal_of(f);
    bp.insert(bp.end(), m.breakpoints.begin(), m.breakpoints.end());
    auto lf = [&](double x) { return f.log_abs(std::span<const double>(&x, 1)) + tt * std::abs(x); };
    LogIntegral li = integrate_log(lf, -radius, radius, bp, o);
    FunctionalResult r;
    r.log_value = li.log_value;
    r.value = std::exp(li.log_value);
    r.error = r.value * li.rel_error;
    r.converged = li.converged;
    r.depth = li.depth;
    return r;
  }
  if (f.dim() == 2) {
    // polar coordinates; trapezoid in angle with a doubling certificate
    auto level = [&](int angles, bool& ok, int& depth) {
      std::vector<double> per(angles);
      for (int k = 0; k < angles; ++k) {
        double th = 2.0 * kPi * k / angles, c = std::cos(th), s = std::sin(th);
        auto lf = [&](double r) {
          if (r <= 0.0) return -kInf;
          double x[2] = {r * c, r * s};
          return std::log(r) + f.log_abs(x) + tt * r;
        };
        LogIntegral li = integrate_log(lf, 0.0, radius, {}, o);
        ok = ok && li.converged;
        depth = std::max(depth, li.depth);
        per[k] = li.log_value;
      }
      return std::log(2.0 * kPi / angles) + log_sum_exp(per);
    };
    bool ok = true;
    int depth = 0;
    int angles = 32;
    double prev = level(angles, ok, depth), cur = prev, rel = kInf;
    for (int it = 0; it < 4; ++it) {
      angles *= 2;
      cur = level(angles, ok, depth);
      rel = std::abs(std::expm1(prev - cur));
      if (rel <= reltol) break;
      prev = cur;
    }
    FunctionalResult r;
    r.log_value = cur;
    r.value = std::exp(cur);
    r.error = r.value * rel;
    r.converged = ok && rel <= std::max(reltol, 1e-12);
    r.depth = depth;
    return r;
  }
  throw std::domain_error("exp_moment: only n = 1 and n = 2 are supported");
}

}  // namespace uplab::functional
