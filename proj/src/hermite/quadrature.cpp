#include "uplab/hermite/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "uplab/core/numeric.hpp"
#include "uplab/hermite/hermite_function.hpp"

namespace uplab::hermite {
namespace {

std::vector<double> jacobi_eigenvalues(const Eigen::VectorXd& diag, const Eigen::VectorXd& sub) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw std::runtime_error("Golub-Welsch: eigen-solver did not converge");
  std::vector<double> x(es.eigenvalues().data(), es.eigenvalues().data() + diag.size());
  std::sort(x.begin(), x.end());
  return x;
}

void symmetrize(std::vector<double>& x) {
  const std::size_t m = x.size();
  for (std::size_t i = 0; i < m / 2; ++i) {
    double s = 0.5 * (x[m - 1 - i] - x[i]);
    x[i] = -s;
    x[m - 1 - i] = s;
  }
  if (m % 2 == 1) x[m / 2] = 0.0;
}

QuadratureRule build_hermite(int m) {
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(m);
  Eigen::VectorXd sub(std::max(m - 1, 0));
  for (int k = 1; k < m; ++k) sub[k - 1] = std::sqrt(k / 2.0);
  std::vector<double> x = m == 1 ? std::vector<double>{0.0} : jacobi_eigenvalues(diag, sub);

  for (double& xi : x) {
    for (int it = 0; it < 3; ++it) {
      auto t = hermite_table(m, xi);
      double denom = std::sqrt(2.0 * m) * t.mantissa[m - 1];
      if (denom == 0.0) break;
      double step = t.mantissa[m] / denom;
      xi -= step;
      if (std::abs(step) < 1e-16 * (1.0 + std::abs(xi))) break;
    }
  }
  symmetrize(x);

  QuadratureRule r;
  r.weightfun = WeightFunction::Hermite;
  r.nodes = x;
  r.weights.resize(m);
  r.plain.resize(m);
  for (int i = 0; i < m; ++i) {
    auto t = hermite_table(m - 1, x[i]);
    double s = 0.0;
    for (int k = 0; k < m; ++k) s += t.mantissa[k] * t.mantissa[k];
    r.plain[i] = std::exp(-2.0 * t.log_scale) / s;
    r.weights[i] = std::exp(-x[i] * x[i] - 2.0 * t.log_scale) / s;
  }
  return r;
}

// P_m and P_{m-1} at x
std::pair<double, double> legendre_pair(int m, double x) {
  double p0 = 1.0, p1 = x;
  if (m == 0) return {1.0, 0.0};
  for (int k = 1; k < m; ++k) {
    double p2 = ((2.0 * k + 1.0) * x * p1 - k * p0) / (k + 1.0);
    p0 = p1;
    p1 = p2;
  }
  return {p1, p0};
}

QuadratureRule build_legendre(int m) {
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(m);
  Eigen::VectorXd sub(std::max(m - 1, 0));
  for (int k = 1; k < m; ++k) sub[k - 1] = k / std::sqrt(4.0 * k * k - 1.0);
  std::vector<double> x = m == 1 ? std::vector<double>{0.0} : jacobi_eigenvalues(diag, sub);
  auto deriv = [m](double xi) {
    auto [pm, pm1] = legendre_pair(m, xi);
    return std::pair{pm, m * (xi * pm - pm1) / (xi * xi - 1.0)};
  };
  for (double& xi : x)
    for (int it = 0; it < 3; ++it) {
      auto [p, dp] = deriv(xi);
      double step = p / dp;
      xi -= step;
      if (std::abs(step) < 1e-16) break;
    }
  symmetrize(x);
  QuadratureRule r;
  r.weightfun = WeightFunction::LegendrePanel;
  r.nodes = x;
  r.weights.resize(m);
  for (int i = 0; i < m; ++i) {
    double dp = deriv(x[i]).second;
    r.weights[i] = 2.0 / ((1.0 - x[i] * x[i]) * dp * dp);
  }
  r.plain = r.weights;
  return r;
}

template <class Build>
std::shared_ptr<const QuadratureRule> cached(std::map<int, std::shared_ptr<const QuadratureRule>>& cache,
                                             std::mutex& mu, int m, Build build) {
  if (m < 1) throw std::invalid_argument("quadrature rule: need m >= 1");
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
  }
  auto rule = std::make_shared<const QuadratureRule>(build(m));
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(m, rule).first->second;
}

}  // namespace

std::shared_ptr<const QuadratureRule> gauss_hermite_rule(int m) {
  static std::map<int, std::shared_ptr<const QuadratureRule>> cache;
  static std::mutex mu;
  return cached(cache, mu, m, build_hermite);
}

std::shared_ptr<const QuadratureRule> gauss_legendre_rule(int m) {
  static std::map<int, std::shared_ptr<const QuadratureRule>> cache;
  static std::mutex mu;
  return cached(cache, mu, m, build_legendre);
}

QuadratureRule semi_infinite_rule(int m, double length_scale) {
  if (!(length_scale > 0)) throw std::invalid_argument("semi_infinite_rule: length scale must be positive");
  auto base = gauss_legendre_rule(m);
  QuadratureRule r;
  r.weightfun = WeightFunction::MappedSemiInfinite;
  for (std::size_t i = 0; i < base->size(); ++i) {
    double u = base->nodes[i];
    r.nodes.push_back(length_scale * (1.0 + u) / (1.0 - u));
    r.weights.push_back(base->weights[i] * 2.0 * length_scale / ((1.0 - u) * (1.0 - u)));
  }
  r.plain = r.weights;
  return r;
}

QuadratureRule composite_legendre(double lo, double hi, double max_width, int points_per_panel,
                                  const std::vector<double>& breakpoints) {
  if (!(hi > lo) || !(max_width > 0)) throw std::invalid_argument("composite_legendre: bad interval");
  std::vector<double> pts{lo, hi};
  for (double b : breakpoints)
    if (b > lo && b < hi) pts.push_back(b);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  auto base = gauss_legendre_rule(points_per_panel);
  QuadratureRule r;
  r.weightfun = WeightFunction::LegendrePanel;
  for (std::size_t s = 0; s + 1 < pts.size(); ++s) {
    int panels = std::max(1, static_cast<int>(std::ceil((pts[s + 1] - pts[s]) / max_width)));
    double h = (pts[s + 1] - pts[s]) / panels;
    for (int p = 0; p < panels; ++p) {
      double c = pts[s] + (p + 0.5) * h;
      for (std::size_t i = 0; i < base->size(); ++i) {
        r.nodes.push_back(c + 0.5 * h * base->nodes[i]);
        r.weights.push_back(0.5 * h * base->weights[i]);
      }
    }
  }
  r.plain = r.weights;
  return r;
}

}  // namespace uplab::hermite
