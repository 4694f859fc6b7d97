#pragma once

#include <complex>
#include <memory>
#include <span>
#include <vector>

#include "uplab/fmodel/test_function.hpp"
#include "uplab/hermite/expansion.hpp"

namespace uplab::bargmann {

using cplx = std::complex<double>;
using hermite::HermiteExpansion;
using hermite::MultiIndex;

// zeta_alpha(z) = z^alpha (2^alpha alpha! pi^{n/2})^{-1/2}, the image of Phi_alpha
cplx normalized_monomial(const MultiIndex& alpha, std::span<const cplx> z);

// Bg(z) = pi^{-n/2} e^{-z^2/4} int g(xi) e^{-|xi|^2/2} e^{z.xi} dxi, z^2 = sum z_j^2.
class EntireFunctionHandle {
 public:
  // sum c_alpha zeta_alpha, exact
  static EntireFunctionHandle exact(const HermiteExpansion& e);
  // tensor Gauss-Hermite rule with `nodes` points per axis; xi = sqrt(2) s puts
  // e^{-|xi|^2/2} into the weight
  static EntireFunctionHandle quadrature(const fmodel::TestFunction& f, int nodes = 64);
  // exact when the function is a finite Hermite expansion (or standard Gaussian class)
  static EntireFunctionHandle of(const fmodel::TestFunction& f);

  int dim() const { return dim_; }
  bool is_exact() const { return exact_ != nullptr; }
  int nodes() const { return nodes_; }
  cplx operator()(std::span<const cplx> z) const;

 private:
  struct Sampled {
    std::vector<double> points;  // n coordinates per node, already scaled by sqrt 2
    std::vector<cplx> gw;        // g(xi_i) * weight_i * 2^{n/2}
  };
  int dim_ = 1;
  int nodes_ = 0;
  std::shared_ptr<const HermiteExpansion> exact_;
  std::shared_ptr<const Sampled> sampled_;
};

struct BargmannValue {
  cplx value;
  bool converged = true;
  double error = 0.0;  // |m-node - 2m-node| on the quadrature path
};

// FiniteHermite inputs exactly; anything else by quadrature, certified by doubling.
BargmannValue bargmann_eval(const fmodel::TestFunction& f, std::span<const cplx> z, int nodes = 64);

// n-fold product of a per-axis grid of k radii x k angles filling the disc |z_j| <= radius.
std::vector<std::vector<cplx>> polydisc_grid(int n, double radius, int k);

enum class BargmannMethod { Exact, Quadrature };

// max over the grid of |Bf(-iz) - B(f^)(z)|
double duality_check(const fmodel::TestFunction& f, const std::vector<std::vector<cplx>>& grid,
                     BargmannMethod method = BargmannMethod::Exact, int nodes = 64);

}  // namespace uplab::bargmann
