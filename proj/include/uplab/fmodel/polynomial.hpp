#pragma once

#include <complex>
#include <map>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "uplab/hermite/multi_index.hpp"

namespace uplab::fmodel {

using cplx = std::complex<double>;
using hermite::MultiIndex;

// Polynomial in n real variables with complex coefficients, keyed by exponent.
class Polynomial {
 public:
  explicit Polynomial(int dim);
  Polynomial(int dim, std::map<MultiIndex, cplx> terms);

  static Polynomial constant(int dim, cplx c);
  static Polynomial monomial(const MultiIndex& alpha, cplx c = 1.0);
  // sum_k coeffs[k] x_axis^k
  static Polynomial linear_form(std::span<const cplx> coeffs);

  int dim() const { return dim_; }
  int degree() const;  // 0 for constants and for the zero polynomial
  bool is_zero() const { return terms_.empty(); }
  const std::map<MultiIndex, cplx>& terms() const { return terms_; }
  cplx coefficient(const MultiIndex& alpha) const;

  cplx operator()(std::span<const double> x) const;
  cplx operator()(std::span<const cplx> z) const;

  // Q(u) = P(M u)
  Polynomial compose_linear(const Eigen::MatrixXd& M) const;
  Polynomial derivative(int axis) const;
  // Sum of |coefficients|; bounds |P(x)| by that times (1+|x|)^deg.
  double abs_coefficient_sum() const;
  // drop terms below rel * max|coefficient|
  Polynomial pruned(double rel = 1e-15) const;

  // n = 1 only: dense coefficients c_0..c_deg
  std::vector<cplx> dense_coefficients() const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(cplx s, const Polynomial& a);

 private:
  int dim_;
  std::map<MultiIndex, cplx> terms_;
};

// n = 1: real parts of the roots lying within `band` of the real axis. These are
// the kinks (or near-kinks) of |P| on the line and make good quadrature breakpoints.
std::vector<double> near_real_roots(const Polynomial& p, double band = 0.5);

}  // namespace uplab::fmodel
