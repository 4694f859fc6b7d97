#pragma once

#include <complex>
#include <functional>
#include <map>
#include <span>

#include "uplab/hermite/multi_index.hpp"

namespace uplab::hermite {

using cplx = std::complex<double>;
using Coefficients = std::map<MultiIndex, cplx>;

// Finite Hermite expansion sum_alpha c_alpha Phi_alpha. Entries with
// |c| < 1e-14 are dropped on construction.
class HermiteExpansion {
 public:
  static constexpr double kPruneBelow = 1e-14;

  explicit HermiteExpansion(int dim);
  HermiteExpansion(int dim, const Coefficients& coeffs);

  int dim() const { return dim_; }
  int max_degree() const;  // largest |alpha| present, 0 when empty
  bool empty() const { return coeffs_.empty(); }
  std::size_t size() const { return coeffs_.size(); }
  const Coefficients& coefficients() const { return coeffs_; }
  auto begin() const { return coeffs_.begin(); }
  auto end() const { return coeffs_.end(); }

  cplx coefficient(const MultiIndex& alpha) const;
  double norm_squared() const;  // Parseval

  // synthesis at real or complex points
  cplx operator()(std::span<const double> x) const;
  cplx operator()(std::span<const cplx> z) const;
  // log|f(x)| without forming e^{-|x|^2/2} explicitly; -inf at zeros
  double log_abs(std::span<const double> x) const;

  HermiteExpansion transformed(const std::function<cplx(const MultiIndex&, cplx)>& fn) const;

  friend HermiteExpansion operator+(const HermiteExpansion& a, const HermiteExpansion& b);
  friend HermiteExpansion operator*(cplx s, const HermiteExpansion& a);

 private:
  int dim_;
  Coefficients coeffs_;
};

inline cplx synthesize(const HermiteExpansion& e, std::span<const double> x) { return e(x); }
inline cplx synthesize(const HermiteExpansion& e, std::span<const cplx> z) { return e(z); }

using PointFunction = std::function<cplx(std::span<const double>)>;

struct Projection {
  HermiteExpansion expansion;
  bool converged = false;
  int nodes_per_axis = 0;
  double max_change = 0.0;  // largest coefficient change in the last doubling
};

// Hermite coefficients (f, Phi_alpha), |alpha| <= D, by tensor Gauss-Hermite
// quadrature. m = 0 selects max(2D+8, 32); m is doubled until no coefficient
// moves by more than tol.
Projection project(const PointFunction& f, int n, int max_degree, int m = 0, double tol = 1e-12);

// Fourier transform on the Hermite basis: c_alpha -> (-i)^{|alpha|} c_alpha.
HermiteExpansion fourier_diagonal(const HermiteExpansion& e);

// (-i)^k without rounding
cplx minus_i_power(int k);

}  // namespace uplab::hermite
