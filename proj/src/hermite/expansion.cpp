#include "uplab/hermite/expansion.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "uplab/core/numeric.hpp"
#include "uplab/hermite/hermite_function.hpp"
#include "uplab/hermite/quadrature.hpp"

namespace uplab::hermite {

HermiteExpansion::HermiteExpansion(int dim) : dim_(dim) {
  if (dim < 1) throw std::invalid_argument("HermiteExpansion: dimension must be >= 1");
}

HermiteExpansion::HermiteExpansion(int dim, const Coefficients& coeffs) : HermiteExpansion(dim) {
  for (const auto& [alpha, c] : coeffs) {
    if (alpha.dim() != dim) throw std::invalid_argument("HermiteExpansion: index dimension mismatch");
    if (std::abs(c) >= kPruneBelow) coeffs_.emplace(alpha, c);
  }
}

int HermiteExpansion::max_degree() const {
  // map is graded, so the last key has the top degree
  return coeffs_.empty() ? 0 : coeffs_.rbegin()->first.order();
}

cplx HermiteExpansion::coefficient(const MultiIndex& alpha) const {
  auto it = coeffs_.find(alpha);
  return it == coeffs_.end() ? cplx{} : it->second;
}

double HermiteExpansion::norm_squared() const {
  NeumaierSum s;
  for (const auto& [alpha, c] : coeffs_) s.add(std::norm(c));
  return s.value();
}

namespace {

template <class T>
std::vector<HermiteTable<T>> axis_tables(const Coefficients& coeffs, int dim, std::span<const T> x) {
  if (static_cast<int>(x.size()) != dim) throw std::invalid_argument("HermiteExpansion: point dimension mismatch");
  std::vector<int> top(dim, 0);
  for (const auto& [alpha, c] : coeffs)
    for (int j = 0; j < dim; ++j) top[j] = std::max(top[j], alpha[j]);
  std::vector<HermiteTable<T>> tables;
  tables.reserve(dim);
  for (int j = 0; j < dim; ++j) tables.push_back(hermite_table(top[j], x[j]));
  return tables;
}

template <class T>
cplx mantissa_sum(const Coefficients& coeffs, const std::vector<HermiteTable<T>>& tables) {
  cplx acc = 0.0;
  for (const auto& [alpha, c] : coeffs) {
    cplx term = c;
    for (std::size_t j = 0; j < tables.size(); ++j) term *= tables[j].mantissa[alpha[j]];
    acc += term;
  }
  return acc;
}

}  // namespace

cplx HermiteExpansion::operator()(std::span<const double> x) const {
  if (coeffs_.empty()) return 0.0;
  auto tables = axis_tables(coeffs_, dim_, x);
  double scale = 0.0;
  for (const auto& t : tables) scale += t.log_scale;
  return mantissa_sum(coeffs_, tables) * std::exp(scale);
}

cplx HermiteExpansion::operator()(std::span<const cplx> z) const {
  if (coeffs_.empty()) return 0.0;
  auto tables = axis_tables(coeffs_, dim_, z);
  cplx scale = 0.0;
  for (const auto& t : tables) scale += t.log_scale;
  return mantissa_sum(coeffs_, tables) * std::exp(scale);
}

double HermiteExpansion::log_abs(std::span<const double> x) const {
  if (coeffs_.empty()) return -kInf;
  auto tables = axis_tables(coeffs_, dim_, x);
  double scale = 0.0;
  for (const auto& t : tables) scale += t.log_scale;
  double m = std::abs(mantissa_sum(coeffs_, tables));
  return m == 0.0 ? -kInf : std::log(m) + scale;
}

HermiteExpansion HermiteExpansion::transformed(const std::function<cplx(const MultiIndex&, cplx)>& fn) const {
  Coefficients out;
  for (const auto& [alpha, c] : coeffs_) out.emplace(alpha, fn(alpha, c));
  return HermiteExpansion(dim_, out);
}

HermiteExpansion operator+(const HermiteExpansion& a, const HermiteExpansion& b) {
  if (a.dim_ != b.dim_) throw std::invalid_argument("HermiteExpansion: dimension mismatch in sum");
  Coefficients out = a.coeffs_;
  for (const auto& [alpha, c] : b.coeffs_) out[alpha] += c;
  return HermiteExpansion(a.dim_, out);
}

HermiteExpansion operator*(cplx s, const HermiteExpansion& a) {
  return a.transformed([s](const MultiIndex&, cplx c) { return s * c; });
}

namespace {

Coefficients project_once(const PointFunction& f, int n, int max_degree, int m) {
  auto rule = gauss_hermite_rule(m);
  // per-axis table H[i][k] = h_k(x_i)
  std::vector<std::vector<double>> H(m, std::vector<double>(max_degree + 1));
  for (int i = 0; i < m; ++i) {
    auto t = hermite_table(max_degree, rule->nodes[i]);
    double s = std::exp(t.log_scale);
    for (int k = 0; k <= max_degree; ++k) H[i][k] = t.mantissa[k] * s;
  }
  auto indices = enumerate_multi_indices(n, max_degree);
  std::vector<cplx> acc(indices.size(), 0.0);
  std::vector<int> node(n, 0);
  std::vector<double> x(n);
  for (;;) {
    double w = 1.0;
    for (int j = 0; j < n; ++j) {
      x[j] = rule->nodes[node[j]];
      w *= rule->plain[node[j]];
    }
    cplx fw = f(x) * w;
    if (fw != 0.0)
      for (std::size_t a = 0; a < indices.size(); ++a) {
        double basis = 1.0;
        for (int j = 0; j < n; ++j) basis *= H[node[j]][indices[a][j]];
        acc[a] += fw * basis;
      }
    int j = 0;
    while (j < n && ++node[j] == m) node[j++] = 0;
    if (j == n) break;
  }
  Coefficients out;
  for (std::size_t a = 0; a < indices.size(); ++a) out.emplace(indices[a], acc[a]);
  return out;
}

}  // namespace

Projection project(const PointFunction& f, int n, int max_degree, int m, double tol) {
  if (n < 1 || max_degree < 0) throw std::invalid_argument("project: need n >= 1, D >= 0");
  if (m == 0) m = std::max(2 * max_degree + 8, 32);
  if (m < max_degree + 1) throw std::invalid_argument("project: need m >= D + 1");
  // unit weights e^{x^2} w overflow past roughly 360 nodes
  const int m_cap = n == 1 ? 256 : (n == 2 ? 128 : 64);
  m = std::min(m, m_cap);

  Coefficients coarse = project_once(f, n, max_degree, m);
  Projection out{HermiteExpansion(n), false, m, kInf};
  while (2 * m <= m_cap) {
    Coefficients fine = project_once(f, n, max_degree, 2 * m);
    double change = 0.0;
    for (const auto& [alpha, c] : fine) change = std::max(change, std::abs(c - coarse[alpha]));
    m *= 2;
    coarse = std::move(fine);
    out.max_change = change;
    if (change <= tol) {
      out.converged = true;
      break;
    }
  }
  out.expansion = HermiteExpansion(n, coarse);
  out.nodes_per_axis = m;
  return out;
}

cplx minus_i_power(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, -1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, 1.0};
  }
}

HermiteExpansion fourier_diagonal(const HermiteExpansion& e) {
  // exact: multiplication by +-1, +-i only swaps components and signs
  return e.transformed([](const MultiIndex& alpha, cplx c) {
    switch (alpha.order() % 4) {
      case 0: return c;
      case 1: return cplx(c.imag(), -c.real());
      case 2: return -c;
      default: return cplx(-c.imag(), c.real());
    }
  });
}

}  // namespace uplab::hermite
