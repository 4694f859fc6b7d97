#include <catch_amalgamated.hpp>

#include <cmath>

#include "uplab/bargmann/bargmann.hpp"
#include "uplab/bargmann/contour.hpp"
#include "uplab/bargmann/product_estimate.hpp"
#include "uplab/core/numeric.hpp"
#include "uplab/fmodel/transforms.hpp"

using namespace uplab;
using namespace uplab::bargmann;
using fmodel::TestFunction;
using hermite::HermiteExpansion;
using hermite::MultiIndex;
using Catch::Approx;

namespace {

double gaussian_ka_1d(double a) { return 2 * kPi / std::sqrt(1 - a * a) * (1 + 2 / kPi * std::asin(a)); }

}  // namespace

TEST_CASE("Bargmann transform of Phi_alpha is the normalized monomial") {
  Rng rng(4);
  for (int n : {1, 2})
    for (const auto& alpha : hermite::enumerate_multi_indices(n, 6)) {
      TestFunction f(HermiteExpansion(n, {{alpha, 1.0}}));
      auto exact = EntireFunctionHandle::exact(*f.hermite());
      auto quad = EntireFunctionHandle::quadrature(f, 48);
      std::vector<cplx> z(n);
      for (auto& zj : z) zj = cplx(rng.uniform(-1.5, 1.5), rng.uniform(-1.5, 1.5));
      const cplx ref = normalized_monomial(alpha, z);
      CHECK(std::abs(exact(z) - ref) < 1e-14);
      CHECK(std::abs(quad(z) - ref) < 1e-12);
    }
  // zeta_0 = pi^{-n/4}
  std::vector<cplx> z0(2, 0.0);
  CHECK(std::abs(normalized_monomial(MultiIndex{0, 0}, z0) - std::pow(kPi, -0.5)) < 1e-15);
}

TEST_CASE("quadrature Bargmann values of e^{-x^2} match the closed form") {
  // B e^{-x^2}(z) = (2/3)^{1/2} e^{-z^2/12}
  Eigen::MatrixXd A = Eigen::MatrixXd::Identity(1, 1);
  TestFunction psi(fmodel::PolyGaussian(fmodel::Polynomial::constant(1, 1.0), A));
  for (cplx z : {cplx(0, 0), cplx(1.5, -0.5), cplx(-2, 2), cplx(0, 3)}) {
    auto v = bargmann_eval(psi, std::span<const cplx>(&z, 1));
    CHECK(v.converged);
    CHECK(std::abs(v.value - std::sqrt(2.0 / 3.0) * std::exp(-z * z / 12.0)) < 1e-12);
  }
}

TEST_CASE("duality Bf(-iz) = B(f^)(z) on both evaluation paths") {
  for (int n : {1, 2}) {
    auto grid = polydisc_grid(n, 2.0, 5);
    CHECK(grid.size() == static_cast<std::size_t>(std::pow(25, n)));
    for (std::uint64_t seed : {1u, 2u}) {
      TestFunction f(fmodel::random_expansion(n, 8, seed));
      CHECK(duality_check(f, grid, BargmannMethod::Exact) < 1e-12);
      CHECK(duality_check(f, grid, BargmannMethod::Quadrature) < 1e-10);
    }
  }
}

TEST_CASE("contour Taylor coefficients of exponentials") {
  EntireFunction e1 = [](std::span<const cplx> z) { return std::exp(z[0]); };
  auto t1 = contour_taylor(e1, 1, {1.0}, 15);
  for (int k = 0; k <= 15; ++k) CHECK(std::abs(t1.coeffs.at(MultiIndex{k}) - 1.0 / std::tgamma(k + 1.0)) < 1e-15);
  // the first bin past the requested degree holds the true coefficient 1/16!
  CHECK(std::abs(t1.aliasing - 1.0 / std::tgamma(17.0)) < 1e-15);
  EntireFunction e2 = [](std::span<const cplx> z) { return std::exp(z[0] + 2.0 * z[1]); };
  auto t2 = contour_taylor(e2, 2, {1.0, 2.0}, 8);
  for (const auto& [a, c] : t2.coeffs) {
    const double ref = std::pow(2.0, a[1]) / (std::tgamma(a[0] + 1.0) * std::tgamma(a[1] + 1.0));
    CHECK(std::abs(c - ref) < 1e-12 * std::max(1.0, ref));
  }
}

TEST_CASE("contour extraction of a polynomial has no aliasing") {
  EntireFunction p = [](std::span<const cplx> z) { return 3.0 + z[0] * z[0] * z[1] - cplx(0, 2) * z[1]; };
  auto t = contour_taylor(p, 2, {1.3}, 4);
  CHECK(t.aliasing < 1e-14);
  CHECK(std::abs(t.coeffs.at(MultiIndex{0, 0}) - 3.0) < 1e-14);
  CHECK(std::abs(t.coeffs.at(MultiIndex{2, 1}) - 1.0) < 1e-14);
  CHECK(std::abs(t.coeffs.at(MultiIndex{0, 1}) - cplx(0, -2)) < 1e-14);
  CHECK_THROWS(contour_taylor(p, 2, {1.0}, 20, 16));
}

TEST_CASE("bridge between Taylor and Hermite coefficients") {
  auto e = fmodel::random_expansion(2, 7, 5);
  auto back = hermite_from_taylor(2, taylor_from_hermite(e));
  for (const auto& [a, c] : e) CHECK(std::abs(back.coefficient(a) - c) < 1e-13);
  MultiIndex a{3, 2};
  CHECK(bridge_log_factor(a) == Approx(0.5 * log_bargmann_norm(a.entries())));
  CHECK_THROWS_AS(bridge_log_factor(MultiIndex{400}), std::overflow_error);
}

TEST_CASE("coefficient paths agree: projection vs contour + bridge") {
  for (int n : {1, 2}) {
    auto e = fmodel::random_expansion(n, 8, 7);
    TestFunction f(e);
    auto handle = EntireFunctionHandle::quadrature(f, 64);
    auto t = contour_taylor(handle, std::vector<double>(n, 2.0), 8);
    auto h = hermite_from_taylor(n, t.coeffs);
    for (const auto& [a, c] : e) CHECK(std::abs(h.coefficient(a) - c) < 1e-10);
    // balanced radii for a single high coefficient
    CHECK(std::abs(contour_coefficient(handle, MultiIndex(std::vector<int>(n, 3))) -
                   t.coeffs.at(MultiIndex(std::vector<int>(n, 3)))) < 1e-10);
  }
}

TEST_CASE("product estimate for Phi_0: ratio at the origin is pi / K_a of the Gaussian") {
  TestFunction phi0(HermiteExpansion(1, {{MultiIndex{0}, 1.0}}));
  for (double a : {0.3, 0.7}) {
    std::vector<std::vector<cplx>> origin{{cplx(0, 0)}};
    auto rep = product_estimate_check(phi0, a, origin);
    CHECK(rep.ka == Approx(gaussian_ka_1d(a) / std::sqrt(kPi)).epsilon(1e-8));
    CHECK(rep.max_ratio == Approx(kPi / gaussian_ka_1d(a)).epsilon(1e-8));
    auto full = product_estimate_check(phi0, a, lattice_grid(1, 3.0, 13), rep.ka);
    CHECK(full.max_ratio <= 1.0);
    CHECK(full.ratios.size() == 169u);
  }
}

TEST_CASE("product estimate holds for an FT eigenfunction in 2-D") {
  TestFunction f(fmodel::make_ft_eigenfunction(2, 4, 0, 9));
  // K enters the ratio as 1/K; leave room for its tolerance
  const double reltol = 1e-2;
  auto rep = product_estimate_check(f, 0.5, lattice_grid(2, 1.5, 3), std::nullopt, reltol);
  CHECK(rep.max_ratio * (1 + reltol) <= 1.0);
}
