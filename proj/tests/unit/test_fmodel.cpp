#include <catch_amalgamated.hpp>

#include <cmath>

#include "uplab/core/numeric.hpp"
#include "uplab/fmodel/transforms.hpp"
#include "uplab/hermite/quadrature.hpp"

using namespace uplab;
using namespace uplab::fmodel;
using Catch::Approx;

namespace {

// brute-force (2 pi)^{-1/2} int f(x) e^{-ixy} dx on a fine composite rule
cplx brute_fourier_1d(const TestFunction& f, double y, double half_width = 14.0) {
  auto rule = hermite::composite_legendre(-half_width, half_width, 0.25, 12);
  cplx s = 0;
  for (std::size_t i = 0; i < rule.size(); ++i) {
    double x = rule.nodes[i];
    s += rule.weights[i] * f(std::span<const double>(&x, 1)) * std::exp(cplx(0, -x * y));
  }
  return s / std::sqrt(2 * kPi);
}

double brute_l2_1d(const TestFunction& f) {
  auto rule = hermite::composite_legendre(-20, 20, 0.25, 12);
  double s = 0;
  for (std::size_t i = 0; i < rule.size(); ++i) {
    double x = rule.nodes[i];
    s += rule.weights[i] * std::norm(f(std::span<const double>(&x, 1)));
  }
  return s;
}

Eigen::MatrixXd scalar(double v) { return Eigen::MatrixXd::Constant(1, 1, v); }

}  // namespace

TEST_CASE("polynomial arithmetic and evaluation") {
  Polynomial x = Polynomial::monomial({1});
  Polynomial one = Polynomial::constant(1, 1.0);
  Polynomial p = (x + one) * (x - one);  // x^2 - 1
  CHECK(p.degree() == 2);
  double t = 3.0;
  CHECK(p(std::span<const double>(&t, 1)) == cplx(8.0));
  CHECK(p.derivative(0).coefficient({1}) == cplx(2.0));
  CHECK((p - p).is_zero());
  auto roots = near_real_roots(p);
  REQUIRE(roots.size() == 2u);
  std::sort(roots.begin(), roots.end());
  CHECK(roots[0] == Approx(-1.0));
  CHECK(roots[1] == Approx(1.0));
  CHECK(p.abs_coefficient_sum() == Approx(2.0));
}

TEST_CASE("Hermite <-> poly-Gaussian change of basis round-trips") {
  for (std::uint64_t seed : {1u, 2u}) {
    auto e = random_expansion(2, 6, seed);
    auto back = poly_gaussian_to_hermite(hermite_to_poly_gaussian(e));
    for (const auto& [a, c] : e) CHECK(std::abs(back.coefficient(a) - c) < 1e-12);
    auto pg = hermite_to_poly_gaussian(e);
    double x[2] = {0.7, -1.1};
    CHECK(std::abs(pg(x) - e(x)) < 1e-13);
  }
}

TEST_CASE("canonical turns the standard Gaussian into Phi_0") {
  TestFunction g = canonical(TestFunction(PolyGaussian::standard(Polynomial::constant(1, 1.0))));
  REQUIRE(g.hermite());
  CHECK(std::abs(g.hermite()->coefficient({0}) - std::pow(kPi, 0.25)) < 1e-14);
}

TEST_CASE("exact Fourier transforms agree with brute-force quadrature") {
  SECTION("Hermite expansion") {
    TestFunction f(random_expansion(1, 6, 3));
    auto ft = fourier(f);
    CHECK(ft.exact);
    for (double y : {-2.0, 0.0, 0.9, 3.1}) CHECK(std::abs(ft.transform(std::span<const double>(&y, 1)) - brute_fourier_1d(f, y)) < 1e-12);
  }
  SECTION("non-standard Gaussian with polynomial factor") {
    Polynomial p = Polynomial::monomial({2}) + Polynomial::constant(1, cplx(0.5, -1.0));
    TestFunction f(PolyGaussian(p, scalar(1.7)));
    auto ft = fourier(f);
    CHECK(ft.exact);
    for (double y : {-2.5, 0.0, 1.3}) CHECK(std::abs(ft.transform(std::span<const double>(&y, 1)) - brute_fourier_1d(f, y)) < 1e-12);
  }
  SECTION("chirped Gaussian goes through quadrature, closed form oracle") {
    // e^{-(A+iB)x^2} -> (2(A+iB))^{-1/2} e^{-y^2/(4(A+iB))}
    const cplx q(0.5, 0.5);
    TestFunction f(PolyGaussian(Polynomial::constant(1, 1.0), scalar(0.5), scalar(0.5)));
    auto ft = fourier(f);
    CHECK_FALSE(ft.exact);
    CHECK(ft.converged);
    for (double y : {-1.0, 0.0, 2.0}) {
      cplx ref = std::exp(-y * y / (4.0 * q)) / std::sqrt(2.0 * q);
      CHECK(std::abs(ft.transform(std::span<const double>(&y, 1)) - ref) < 1e-9);
    }
  }
}

TEST_CASE("Plancherel for exact transforms") {
  Polynomial p = Polynomial::monomial({3}) + Polynomial::constant(1, 2.0);
  TestFunction f(PolyGaussian(p, scalar(0.8)));
  CHECK(brute_l2_1d(fourier(f).transform) == Approx(brute_l2_1d(f)).epsilon(1e-11));
}

TEST_CASE("dilation preserves the L2 norm and composes") {
  TestFunction f(random_expansion(1, 5, 4));
  const double norm = brute_l2_1d(f);
  for (double d : {1.0 / 3.0, 0.7, 3.0}) CHECK(brute_l2_1d(dilate(f, d)) == Approx(norm).epsilon(1e-11));
  auto back = dilate(dilate(f, 3.0), 1.0 / 3.0);
  REQUIRE(back.hermite());
  for (const auto& [a, c] : *f.hermite()) CHECK(std::abs(back.hermite()->coefficient(a) - c) < 1e-12);
  CHECK_THROWS_AS(dilate(f, 0.0), std::domain_error);
}

TEST_CASE("FT eigenfunctions are eigenfunctions") {
  for (int k0 = 0; k0 < 4; ++k0) {
    auto e = make_ft_eigenfunction(2, 12, k0, 10 + k0);
    CHECK(e.norm_squared() == Approx(1.0));
    auto hat = hermite::fourier_diagonal(e);
    for (const auto& [a, c] : e) {
      CHECK(a.order() % 4 == k0);
      CHECK(std::abs(hat.coefficient(a) - hermite::minus_i_power(k0) * c) < 1e-15);
    }
  }
  CHECK_THROWS(make_ft_eigenfunction(1, 2, 3, 1));
}

TEST_CASE("seeded generators are deterministic") {
  auto a = random_expansion(2, 5, 77), b = random_expansion(2, 5, 77), c = random_expansion(2, 5, 78);
  CHECK(a.coefficients() == b.coefficients());
  CHECK(a.coefficients() != c.coefficients());
  CHECK(a.norm_squared() == Approx(1.0));
  for (const auto& [k, v] : random_phase_expansion(1, 10, 3)) CHECK(std::abs(v) == Approx(1.0));
}

TEST_CASE("decay bounds dominate the function") {
  std::vector<TestFunction> fs{TestFunction(random_expansion(1, 8, 2)),
                               TestFunction(PolyGaussian(Polynomial::monomial({4}), scalar(0.3), scalar(2.0)))};
  for (const auto& f : fs) {
    auto b = f.decay_bound();
    for (double x = -15; x <= 15; x += 0.37) CHECK(f.log_abs(std::span<const double>(&x, 1)) <= b.log_bound(std::abs(x)) + 1e-12);
  }
}

TEST_CASE("sampled transforms are capped by their decay bound") {
  TestFunction f(PolyGaussian(Polynomial::constant(1, 1.0), scalar(0.5), scalar(0.5)));
  auto ft = fourier(f);
  REQUIRE(ft.transform.sampled());
  auto b = ft.transform.decay_bound();
  for (double y : {0.0, 5.0, 30.0, 80.0}) CHECK(ft.transform.log_abs(std::span<const double>(&y, 1)) <= b.log_bound(y) + 1e-12);
}
