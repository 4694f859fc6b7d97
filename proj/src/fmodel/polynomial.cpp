#include "uplab/fmodel/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace uplab::fmodel {

Polynomial::Polynomial(int dim) : dim_(dim) {
  if (dim < 1) throw std::invalid_argument("Polynomial: dimension must be >= 1");
}

Polynomial::Polynomial(int dim, std::map<MultiIndex, cplx> terms) : Polynomial(dim) {
  for (auto& [alpha, c] : terms) {
    if (alpha.dim() != dim) throw std::invalid_argument("Polynomial: exponent dimension mismatch");
    if (c != 0.0) terms_.emplace(alpha, c);
  }
}

Polynomial Polynomial::constant(int dim, cplx c) {
  return Polynomial(dim, {{MultiIndex::zero(dim), c}});
}

Polynomial Polynomial::monomial(const MultiIndex& alpha, cplx c) {
  return Polynomial(alpha.dim(), {{alpha, c}});
}

Polynomial Polynomial::linear_form(std::span<const cplx> coeffs) {
  const int n = static_cast<int>(coeffs.size());
  std::map<MultiIndex, cplx> t;
  for (int k = 0; k < n; ++k) {
    std::vector<int> e(n, 0);
    e[k] = 1;
    t.emplace(MultiIndex(e), coeffs[k]);
  }
  return Polynomial(n, t);
}

int Polynomial::degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first.order(); }

cplx Polynomial::coefficient(const MultiIndex& alpha) const {
  auto it = terms_.find(alpha);
  return it == terms_.end() ? cplx{} : it->second;
}

namespace {

template <class T>
cplx eval_terms(const std::map<MultiIndex, cplx>& terms, int dim, std::span<const T> x) {
  if (static_cast<int>(x.size()) != dim) throw std::invalid_argument("Polynomial: point dimension mismatch");
  int top = 0;
  for (const auto& [alpha, c] : terms)
    for (int j = 0; j < dim; ++j) top = std::max(top, alpha[j]);
  std::vector<std::vector<T>> pw(dim, std::vector<T>(top + 1));
  for (int j = 0; j < dim; ++j) {
    pw[j][0] = T(1.0);
    for (int k = 1; k <= top; ++k) pw[j][k] = pw[j][k - 1] * x[j];
  }
  cplx acc = 0.0;
  for (const auto& [alpha, c] : terms) {
    cplx term = c;
    for (int j = 0; j < dim; ++j) term *= pw[j][alpha[j]];
    acc += term;
  }
  return acc;
}

}  // namespace

cplx Polynomial::operator()(std::span<const double> x) const { return eval_terms(terms_, dim_, x); }
cplx Polynomial::operator()(std::span<const cplx> z) const { return eval_terms(terms_, dim_, z); }

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  if (a.dim_ != b.dim_) throw std::invalid_argument("Polynomial: dimension mismatch");
  auto t = a.terms_;
  for (const auto& [alpha, c] : b.terms_) t[alpha] += c;
  return Polynomial(a.dim_, t);
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + cplx(-1.0) * b; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.dim_ != b.dim_) throw std::invalid_argument("Polynomial: dimension mismatch");
  std::map<MultiIndex, cplx> t;
  std::vector<int> e(a.dim_);
  for (const auto& [al, ca] : a.terms_)
    for (const auto& [be, cb] : b.terms_) {
      for (int j = 0; j < a.dim_; ++j) e[j] = al[j] + be[j];
      t[MultiIndex(e)] += ca * cb;
    }
  return Polynomial(a.dim_, t);
}

Polynomial operator*(cplx s, const Polynomial& a) {
  auto t = a.terms_;
  for (auto& [alpha, c] : t) c *= s;
  return Polynomial(a.dim_, t);
}

Polynomial Polynomial::compose_linear(const Eigen::MatrixXd& M) const {
  if (M.rows() != dim_ || M.cols() != dim_) throw std::invalid_argument("compose_linear: matrix size mismatch");
  // powers of each linear form (M u)_j
  int top = 0;
  for (const auto& [alpha, c] : terms_)
    for (int j = 0; j < dim_; ++j) top = std::max(top, alpha[j]);
  std::vector<std::vector<Polynomial>> pw(dim_);
  for (int j = 0; j < dim_; ++j) {
    std::vector<cplx> row(dim_);
    for (int k = 0; k < dim_; ++k) row[k] = M(j, k);
    Polynomial lin = linear_form(row);
    pw[j].push_back(constant(dim_, 1.0));
    for (int k = 1; k <= top; ++k) pw[j].push_back(pw[j].back() * lin);
  }
  Polynomial out(dim_);
  for (const auto& [alpha, c] : terms_) {
    Polynomial term = constant(dim_, c);
    for (int j = 0; j < dim_; ++j)
      if (alpha[j] > 0) term = term * pw[j][alpha[j]];
    out = out + term;
  }
  return out.pruned();
}

Polynomial Polynomial::derivative(int axis) const {
  if (axis < 0 || axis >= dim_) throw std::invalid_argument("Polynomial::derivative: bad axis");
  std::map<MultiIndex, cplx> t;
  for (const auto& [alpha, c] : terms_) {
    if (alpha[axis] == 0) continue;
    std::vector<int> e(alpha.entries().begin(), alpha.entries().end());
    e[axis] -= 1;
    t[MultiIndex(e)] += c * static_cast<double>(alpha[axis]);
  }
  return Polynomial(dim_, t);
}

double Polynomial::abs_coefficient_sum() const {
  double s = 0.0;
  for (const auto& [alpha, c] : terms_) s += std::abs(c);
  return s;
}

Polynomial Polynomial::pruned(double rel) const {
  double top = 0.0;
  for (const auto& [alpha, c] : terms_) top = std::max(top, std::abs(c));
  std::map<MultiIndex, cplx> t;
  for (const auto& [alpha, c] : terms_)
    if (std::abs(c) > rel * top) t.emplace(alpha, c);
  return Polynomial(dim_, t);
}

std::vector<cplx> Polynomial::dense_coefficients() const {
  if (dim_ != 1) throw std::invalid_argument("dense_coefficients: univariate only");
  std::vector<cplx> c(degree() + 1, 0.0);
  for (const auto& [alpha, v] : terms_) c[alpha[0]] = v;
  return c;
}

std::vector<double> near_real_roots(const Polynomial& p, double band) {
  auto c = p.pruned(1e-13).dense_coefficients();
  while (!c.empty() && c.back() == 0.0) c.pop_back();
  const int d = static_cast<int>(c.size()) - 1;
  if (d < 1) return {};
  Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(d, d);
  for (int i = 1; i < d; ++i) comp(i, i - 1) = 1.0;
  for (int i = 0; i < d; ++i) comp(i, d - 1) = -c[i] / c[d];
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(comp, false);
  std::vector<double> out;
  for (int i = 0; i < d; ++i) {
    cplx r = es.eigenvalues()[i];
    if (std::abs(r.imag()) <= band) out.push_back(r.real());
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace uplab::fmodel
