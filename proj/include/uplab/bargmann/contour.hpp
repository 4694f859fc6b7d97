#pragma once

#include <functional>
#include <map>
#include <vector>

#include "uplab/bargmann/bargmann.hpp"

namespace uplab::bargmann {

using EntireFunction = std::function<cplx(std::span<const cplx>)>;

struct TaylorCoefficients {
  int dim = 1;
  std::map<MultiIndex, cplx> coeffs;
  std::vector<double> radii;
  int points = 0;  // M per axis
  // largest |DFT bin| (in units of c_alpha r^alpha) among bins whose index has a
  // component above the requested degree; zero for polynomials of lower degree
  double aliasing = 0.0;
};

// c_alpha for |alpha| <= max_degree from an M^n-point tensor grid on the torus
// |z_j| = radii[j]. M = 0 selects 2 max_degree + 16. Indices >= M are refused.
TaylorCoefficients contour_taylor(const EntireFunction& F, int n, std::vector<double> radii, int max_degree,
                                  int points = 0);
TaylorCoefficients contour_taylor(const EntireFunctionHandle& F, std::vector<double> radii, int max_degree,
                                  int points = 0);

// radii sqrt(2 alpha_j + 1)
std::vector<double> balanced_radii(const MultiIndex& alpha);

// One coefficient at its own balanced radii.
cplx contour_coefficient(const EntireFunctionHandle& F, const MultiIndex& alpha, int points = 0);

// (f, Phi_alpha) = (2^alpha alpha! pi^{n/2})^{1/2} c_alpha, in log arithmetic.
// std::overflow_error when the factor leaves double range.
HermiteExpansion hermite_from_taylor(int n, const std::map<MultiIndex, cplx>& taylor);
std::map<MultiIndex, cplx> taylor_from_hermite(const HermiteExpansion& e);
double bridge_log_factor(const MultiIndex& alpha);  // log (2^alpha alpha! pi^{n/2})^{1/2}

}  // namespace uplab::bargmann
