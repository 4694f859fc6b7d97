#include <catch_amalgamated.hpp>

#include <cmath>

#include "uplab/core/adaptive.hpp"
#include "uplab/core/numeric.hpp"
#include "uplab/hermite/expansion.hpp"
#include "uplab/hermite/hermite_function.hpp"
#include "uplab/hermite/mehler.hpp"
#include "uplab/hermite/multi_index.hpp"
#include "uplab/hermite/quadrature.hpp"

using namespace uplab;
using namespace uplab::hermite;
using Catch::Approx;

namespace {

// physicists' H_k from the explicit sum, long double
long double explicit_hermite_poly(int k, long double x) {
  long double s = 0;
  for (int m = 0; 2 * m <= k; ++m)
    s += ((m % 2) ? -1.0L : 1.0L) * std::pow(2.0L * x, k - 2 * m) / (std::tgamma(m + 1.0L) * std::tgamma(k - 2 * m + 1.0L));
  return std::tgamma(k + 1.0L) * s;
}

long double explicit_phi(int k, long double x) {
  long double norm = std::sqrt(std::pow(2.0L, k) * std::tgamma(k + 1.0L) * std::sqrt(std::acos(-1.0L)));
  return explicit_hermite_poly(k, x) * std::exp(-x * x / 2) / norm;
}

double mehler_closed(double r, double x, double y) {
  const double q = 1 - r * r;
  return std::exp(-(1 + r * r) * (x * x + y * y) / (2 * q) + 2 * r * x * y / q) / std::sqrt(kPi * q);
}

}  // namespace

TEST_CASE("Hermite functions match the explicit polynomial formula") {
  for (int k = 0; k <= 20; ++k)
    for (double x : {-3.7, -1.0, 0.0, 0.4, 2.5, 5.0}) {
      double ref = static_cast<double>(explicit_phi(k, x));
      CHECK(hermite_function(k, x).value == Approx(ref).margin(1e-13).epsilon(1e-11));
    }
}

TEST_CASE("Hermite recurrence stays finite far out and at high order") {
  auto v = hermite_function(2000, 60.0);
  CHECK(std::isfinite(v.value));
  CHECK(std::abs(v.value) < 1.0);
  auto u = hermite_function(10, 60.0);  // e^{-1800}: below double range
  CHECK(u.value == 0.0);
  CHECK(u.underflow);
  // |h_k| <= pi^{-1/4} (Cramer)
  for (int k : {50, 200, 1000})
    for (double x : {0.0, 0.3, 7.0, 20.0, 40.0}) CHECK(std::abs(hermite_function(k, x).value) <= std::pow(kPi, -0.25) + 1e-12);
}

TEST_CASE("Gauss-Hermite rule integrates even moments exactly") {
  auto rule = gauss_hermite_rule(20);
  REQUIRE(rule->size() == 20);
  for (int k = 0; k < 20; ++k) {
    double s = 0;
    for (std::size_t i = 0; i < rule->size(); ++i) s += rule->weights[i] * std::pow(rule->nodes[i], 2 * k);
    CHECK(s == Approx(std::tgamma(k + 0.5)).epsilon(1e-12));
  }
  for (std::size_t i = 0; i + 1 < rule->size(); ++i) CHECK(rule->nodes[i] < rule->nodes[i + 1]);
}

TEST_CASE("Gauss-Legendre and composite rules") {
  auto gl = gauss_legendre_rule(10);
  double s = 0;
  for (std::size_t i = 0; i < gl->size(); ++i) s += gl->weights[i] * std::pow(gl->nodes[i], 18);
  CHECK(s == Approx(2.0 / 19.0).epsilon(1e-13));
  auto c = composite_legendre(-2.0, 3.0, 0.7, 8, {0.5});
  double t = 0;
  for (std::size_t i = 0; i < c.size(); ++i) t += c.weights[i] * std::exp(c.nodes[i]);
  CHECK(t == Approx(std::exp(3.0) - std::exp(-2.0)).epsilon(1e-13));
  auto si = semi_infinite_rule(64, 1.0);
  double u = 0;
  for (std::size_t i = 0; i < si.size(); ++i) u += si.weights[i] * std::exp(-si.nodes[i]);
  CHECK(u == Approx(1.0).epsilon(1e-8));
}

TEST_CASE("tensor Gauss-Hermite orthonormality, n = 1 and 2") {
  auto rule = gauss_hermite_rule(32);
  for (int n : {1, 2}) {
    auto idx = enumerate_multi_indices(n, 12);
    double worst = 0;
    for (std::size_t a = 0; a < idx.size(); a += 3)
      for (std::size_t b = a; b < idx.size(); b += 2) {
        double s = 0;
        if (n == 1) {
          for (int i = 0; i < 32; ++i) {
            double x = rule->nodes[i];
            s += rule->plain[i] * hermite_eval(idx[a], std::span<const double>(&x, 1)).value *
                 hermite_eval(idx[b], std::span<const double>(&x, 1)).value;
          }
        } else {
          for (int i = 0; i < 32; ++i)
            for (int j = 0; j < 32; ++j) {
              double x[2] = {rule->nodes[i], rule->nodes[j]};
              s += rule->plain[i] * rule->plain[j] * hermite_eval(idx[a], x).value * hermite_eval(idx[b], x).value;
            }
        }
        worst = std::max(worst, std::abs(s - (a == b ? 1.0 : 0.0)));
      }
    CHECK(worst < 1e-10);
  }
}

TEST_CASE("complex evaluation agrees with real evaluation on the real axis") {
  for (int k : {0, 3, 11}) {
    MultiIndex a{k};
    for (double x : {-1.5, 0.2, 3.0}) {
      cplx z(x, 0.0);
      CHECK(std::abs(hermite_eval(a, std::span<const cplx>(&z, 1)) - hermite_eval(a, std::span<const double>(&x, 1)).value) <
            1e-13);
    }
  }
}

TEST_CASE("multi-index enumeration") {
  CHECK(enumerate_multi_indices(1, 12).size() == 13u);
  CHECK(enumerate_multi_indices(2, 12).size() == 91u);
  CHECK(enumerate_multi_indices(3, 4).size() == 35u);
  auto idx = enumerate_multi_indices(2, 3);
  for (std::size_t i = 0; i + 1 < idx.size(); ++i) CHECK(idx[i].order() <= idx[i + 1].order());
  CHECK(MultiIndex({2, 0}).to_string() == "(2,0)");
}

TEST_CASE("Mehler kernel: closed form, partial sums, tail ratio") {
  Rng rng(5);
  for (int i = 0; i < 10; ++i) {
    double x = rng.uniform(-2, 2), y = rng.uniform(-2, 2);
    std::span<const double> xs(&x, 1), ys(&y, 1);
    CHECK(mehler_kernel(0.5, xs, ys) == Approx(mehler_closed(0.5, x, y)).epsilon(1e-13));
    CHECK(std::abs(mehler_partial_sum(0.5, xs, ys, 40) - mehler_closed(0.5, x, y)) < 1e-10);
  }
  double z = 0.0;
  std::span<const double> o(&z, 1);
  const double full = mehler_closed(0.5, 0, 0);
  const double ratio = (full - mehler_partial_sum(0.5, o, o, 22)) / (full - mehler_partial_sum(0.5, o, o, 20));
  CHECK(std::abs(ratio / 0.25 - 1.0) < 0.2);
}

TEST_CASE("projection recovers a known expansion and Parseval holds") {
  HermiteExpansion e(2, {{MultiIndex{0, 0}, cplx(0.5, 0)}, {MultiIndex{2, 1}, cplx(0, -0.3)}, {MultiIndex{0, 5}, 0.1}});
  auto p = project([&e](std::span<const double> x) { return e(x); }, 2, 8);
  CHECK(p.converged);
  for (const auto& a : enumerate_multi_indices(2, 8)) CHECK(std::abs(p.expansion.coefficient(a) - e.coefficient(a)) < 1e-12);
  CHECK(e.norm_squared() == Approx(0.25 + 0.09 + 0.01));
}

TEST_CASE("Fourier diagonal and (-i)^k") {
  CHECK(minus_i_power(0) == cplx(1, 0));
  CHECK(minus_i_power(1) == cplx(0, -1));
  CHECK(minus_i_power(2) == cplx(-1, 0));
  CHECK(minus_i_power(7) == cplx(0, 1));
  HermiteExpansion e(1, {{MultiIndex{3}, 1.0}});
  CHECK(fourier_diagonal(e).coefficient(MultiIndex{3}) == cplx(0, 1));
  // F^4 = identity
  auto r = fourier_diagonal(fourier_diagonal(fourier_diagonal(fourier_diagonal(e))));
  CHECK(r.coefficient(MultiIndex{3}) == e.coefficient(MultiIndex{3}));
}

TEST_CASE("log_abs matches log of the synthesized value") {
  HermiteExpansion e(1, {{MultiIndex{0}, 1.0}, {MultiIndex{4}, 0.2}});
  for (double x : {-2.0, 0.0, 1.3, 6.0}) CHECK(e.log_abs(std::span<const double>(&x, 1)) == Approx(std::log(std::abs(e(std::span<const double>(&x, 1))))));
  double far = 45.0;  // e^{-x^2/2} underflows, log form does not
  CHECK(std::isfinite(e.log_abs(std::span<const double>(&far, 1))));
}

TEST_CASE("adaptive log-domain integration") {
  AdaptiveOptions o;
  o.reltol = 1e-12;
  auto r = integrate_log([](double x) { return -x * x; }, -12.0, 12.0, {0.0}, o);
  CHECK(r.converged);
  CHECK(std::exp(r.log_value) == Approx(std::sqrt(kPi)).epsilon(1e-12));
  // kink at 1
  auto k = integrate_log([](double x) { return std::log(std::abs(x - 1.0)) - x * x; }, -10.0, 10.0, {1.0}, o);
  CHECK(k.converged);
}

TEST_CASE("numeric helpers") {
  std::vector<double> v{std::log(2.0), std::log(3.0), -kInf};
  CHECK(std::exp(log_sum_exp(v)) == Approx(5.0));
  CHECK(log_sum_exp(std::vector<double>{}) == -kInf);
  CHECK(log_factorial(10) == Approx(std::log(3628800.0)));
  std::vector<double> xs{0, 1, 2, 3}, ys{1, 3, 5, 7};
  auto f = fit_line(xs, ys);
  CHECK(f.slope == Approx(2.0));
  CHECK(f.intercept == Approx(1.0));
  Rng a(9), b(9);
  for (int i = 0; i < 5; ++i) CHECK(a.normal() == b.normal());
}
