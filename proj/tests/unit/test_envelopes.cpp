#include <catch_amalgamated.hpp>

#include <cmath>

#include "uplab/core/numeric.hpp"
#include "uplab/envelopes/envelope.hpp"
#include "uplab/envelopes/fits.hpp"
#include "uplab/envelopes/pointwise.hpp"
#include "uplab/fmodel/transforms.hpp"
#include "uplab/functional/functionals.hpp"

using namespace uplab;
using namespace uplab::envelopes;
using hermite::Coefficients;
using Catch::Approx;

namespace {

EnvelopeParams with_t(double t, double c = 1.0) {
  EnvelopeParams p;
  p.t = t;
  p.c = c;
  return p;
}

}  // namespace

TEST_CASE("t and a are linked by a = tanh(2t)") {
  for (double t : {0.1, 0.5, 1.3}) CHECK(t_from_a(std::tanh(2 * t)) == Approx(t).epsilon(1e-14));
  EnvelopeParams p;
  p.a = 0.5;
  p.t = t_from_a(0.5) + 1e-6;
  CHECK_THROWS_AS(DecayEnvelope(EnvelopeKind::HardyPointwise, 1, p), std::invalid_argument);
  p.t = t_from_a(0.5);
  CHECK(DecayEnvelope(EnvelopeKind::HardyPointwise, 1, p).t() == Approx(std::atanh(0.5) / 2));
}

TEST_CASE("envelope parameter validation") {
  CHECK_THROWS_AS(DecayEnvelope(EnvelopeKind::Entire, 1, EnvelopeParams{}), std::invalid_argument);
  EnvelopeParams p;
  p.a = 0.5;
  CHECK_THROWS_AS(DecayEnvelope(EnvelopeKind::FtEigenfunction, 1, p), std::invalid_argument);
  CHECK_THROWS_AS(DecayEnvelope(EnvelopeKind::VemuriHardy, 2, with_t(1.0)), std::invalid_argument);
  for (auto k : {EnvelopeKind::FtEigenfunction, EnvelopeKind::Onfinite, EnvelopeKind::ExpDecay, EnvelopeKind::Entire,
                 EnvelopeKind::VemuriHardy, EnvelopeKind::HardyPointwise})
    CHECK(envelope_kind_from_string(to_string(k)) == k);
  CHECK_THROWS(envelope_kind_from_string("nonsense"));
}

TEST_CASE("envelope values against direct formulas") {
  const double t = 0.7, C = 2.5;
  hermite::MultiIndex a{3, 1};
  const double n = 2, order = 4;
  CHECK(DecayEnvelope(EnvelopeKind::Onfinite, 2, with_t(t, C))(a) ==
        Approx(C * std::pow(7.0 * 3.0, 0.25) * std::exp(-(2 * order + n) * t / 2)));
  CHECK(DecayEnvelope(EnvelopeKind::ExpDecay, 2, with_t(t, C))(a) ==
        Approx(C * std::exp(-t * (std::sqrt(7.0) + std::sqrt(3.0)) / std::sqrt(2 * n))));
  CHECK(DecayEnvelope(EnvelopeKind::Entire, 2, with_t(t, C))(a) == Approx(C * std::exp(-t * std::sqrt(2 * order + n))));
  CHECK(DecayEnvelope(EnvelopeKind::HardyPointwise, 2, with_t(t, C))(a) == Approx(C * std::exp(-(2 * order + n) * t / 2)));
  CHECK(DecayEnvelope(EnvelopeKind::VemuriHardy, 1, with_t(t, C))(hermite::MultiIndex{5}) ==
        Approx(C * std::pow(11.0, -0.25) * std::exp(-11.0 * t / 2)));
  EnvelopeParams p;
  p.a = 0.5;
  p.ka = 9.0;
  const double te = t_from_a(0.5);
  CHECK(DecayEnvelope(EnvelopeKind::FtEigenfunction, 2, p)(a) ==
        Approx(std::exp(te / 2) * 3.0 * std::pow(21.0, 1.0 / 8.0) * std::exp(-(2 * order + n) * te / (2 * n))));
}

TEST_CASE("envelope check: planted coefficients on and off the envelope") {
  DecayEnvelope env(EnvelopeKind::Entire, 1, with_t(0.8));
  Coefficients on, off;
  for (int k = 0; k <= 30; ++k) {
    on[hermite::MultiIndex{k}] = 0.5 * env(hermite::MultiIndex{k});
    off[hermite::MultiIndex{k}] = 0.5 * env(hermite::MultiIndex{k}) * std::exp(0.05 * k);
  }
  auto r_on = envelope_check(hermite::HermiteExpansion(1, on), env);
  CHECK(r_on.dominated);
  CHECK(r_on.max_log_ratio == Approx(std::log(0.5)));
  CHECK(std::abs(r_on.slope) < 1e-12);
  auto r_off = envelope_check(hermite::HermiteExpansion(1, off), env);
  CHECK_FALSE(r_off.dominated);
  CHECK(r_off.slope == Approx(0.05).epsilon(1e-6));
  CHECK_THROWS(envelope_check(hermite::HermiteExpansion(1), env));
}

TEST_CASE("FT eigenfunctions sit under their envelope") {
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    auto e = fmodel::make_ft_eigenfunction(1, 12, static_cast<int>(seed % 4), seed);
    EnvelopeParams p;
    p.a = 0.5;
    p.ka = functional::ka_eval(fmodel::TestFunction(e), 0.5).value;
    auto rep = envelope_check(e, DecayEnvelope(EnvelopeKind::FtEigenfunction, 1, p));
    CHECK(rep.dominated);
    CHECK(rep.max_log_ratio < 0.0);
  }
}

TEST_CASE("decay-rate fits") {
  Coefficients sq, geo;
  for (int k = 0; k <= 20; ++k) {
    sq[hermite::MultiIndex{k}] = 3.0 * std::exp(-2.0 * std::sqrt(2.0 * k + 1.0));
    geo[hermite::MultiIndex{k}] = std::exp(-0.4 * (2.0 * k + 1.0) / 2.0);
  }
  auto f1 = decay_rate_fit(hermite::HermiteExpansion(1, sq), DecayLaw::SqrtExponential);
  CHECK(f1.t == Approx(2.0).epsilon(1e-12));
  CHECK(f1.intercept == Approx(-std::log(3.0)).epsilon(1e-12));
  auto f2 = decay_rate_fit(hermite::HermiteExpansion(1, geo), DecayLaw::Geometric);
  CHECK(f2.t == Approx(0.4).epsilon(1e-12));
  CHECK(decay_rate_fit(hermite::HermiteExpansion(1, sq), DecayLaw::Geometric).residual > 0.1);
  Coefficients few{{hermite::MultiIndex{0}, 1.0}, {hermite::MultiIndex{1}, 0.5}};
  CHECK_THROWS(decay_rate_fit(hermite::HermiteExpansion(1, few), DecayLaw::Geometric));
  CHECK(decay_law_from_string(to_string(DecayLaw::Geometric)) == DecayLaw::Geometric);
}

TEST_CASE("pointwise Gaussian bound from coefficient decay") {
  const double C = 1.0, t = 1.0;
  // extremal case: every coefficient on the envelope, same sign
  Coefficients c;
  for (int k = 0; k <= 60; ++k) c[hermite::MultiIndex{k}] = C * std::exp(-(2.0 * k + 1.0) * t / 2.0);
  hermite::HermiteExpansion f(1, c);
  // s = 0: uniform bound C pi^{-1/4} / (2 sinh(t/2)) from |h_k| <= pi^{-1/4}
  CHECK(pointwise_constant(C, t, 0.0, 1) == Approx(C * std::pow(kPi, -0.25) / (2 * std::sinh(t / 2))));
  std::vector<std::vector<double>> grid;
  for (double x = -6; x <= 6; x += 0.25) grid.push_back({x});
  for (double s : {0.0, 0.2, 0.5, 0.9}) {
    auto v = verify_pointwise_bound(f, C, t, s, grid);
    CHECK(v.coefficients_dominated);
    CHECK(v.passed);
  }
  CHECK_THROWS_AS(pointwise_constant(C, t, t, 1), std::domain_error);
  c[hermite::MultiIndex{3}] *= 2.0;
  CHECK_FALSE(verify_pointwise_bound(hermite::HermiteExpansion(1, c), C, t, 0.5, grid).coefficients_dominated);
}

TEST_CASE("Hardy regimes") {
  CHECK(hardy_regime(0.3) == HardyRegime::OnlyZero);
  CHECK(hardy_regime(0.25) == HardyRegime::OnlyGaussian);
  CHECK(hardy_regime(0.1) == HardyRegime::InfiniteFamily);
  CHECK_THROWS_AS(hardy_regime(0.0), std::domain_error);
}
