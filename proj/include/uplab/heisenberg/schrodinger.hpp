#pragma once

#include <span>
#include <vector>

#include "uplab/fmodel/test_function.hpp"

namespace uplab::heisenberg {

using hermite::HermiteExpansion;

// (x + iy, u + iv); y = v = 0 for real elements
struct GroupElement {
  std::vector<double> x, u, y, v;

  static GroupElement identity(int n);
  static GroupElement real(std::vector<double> x, std::vector<double> u);
  static GroupElement imaginary(std::vector<double> y, std::vector<double> v);
  int dim() const { return static_cast<int>(x.size()); }
  bool is_real() const;
};

// pi(x,u) f(xi) = e^{i(x.xi + x.u/2)} f(xi + u), with x, u complexified for
// complex elements. Complex elements need a finite Hermite expansion
// (std::domain_error otherwise).
fmodel::TestFunction schrodinger_apply(const fmodel::TestFunction& f, const GroupElement& g);

// int |f|^2 by a tensor Gauss-Hermite rule centred at `centre` (exact when
// |f|^2 is a polynomial times e^{-|xi - centre|^2} of degree < 2 nodes).
double l2_norm_squared(const fmodel::TestFunction& f, std::span<const double> centre, int nodes = 64);

// e^{-t sqrt(H)}: c_alpha -> e^{-t (2|alpha|+n)^{1/2}} c_alpha
HermiteExpansion poisson_semigroup(const HermiteExpansion& e, double t);

}  // namespace uplab::heisenberg
