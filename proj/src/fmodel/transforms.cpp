#include "uplab/fmodel/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "uplab/core/numeric.hpp"
#include "uplab/hermite/quadrature.hpp"

namespace uplab::fmodel {

using hermite::Coefficients;
using hermite::enumerate_multi_indices;

namespace {

// h_k(x) = q[k](x) e^{-x^2/2}, q[k] dense in powers of x
std::vector<std::vector<double>> hermite_polys(int K) {
  std::vector<std::vector<double>> q(K + 1);
  const double c0 = std::pow(kPi, -0.25);
  q[0] = {c0};
  if (K >= 1) q[1] = {0.0, std::sqrt(2.0) * c0};
  for (int k = 1; k < K; ++k) {
    q[k + 1].assign(k + 2, 0.0);
    double a = std::sqrt(2.0 / (k + 1.0)), b = std::sqrt(k / (k + 1.0));
    for (int j = 0; j <= k; ++j) q[k + 1][j + 1] += a * q[k][j];
    for (int j = 0; j < k; ++j) q[k + 1][j] -= b * q[k - 1][j];
  }
  return q;
}

// x^j e^{-x^2/2} = sum_k T[j][k] h_k(x)
std::vector<std::vector<double>> monomial_to_hermite(int J) {
  std::vector<std::vector<double>> T(J + 1, std::vector<double>(J + 2, 0.0));
  T[0][0] = std::pow(kPi, 0.25);
  for (int j = 0; j < J; ++j)
    for (int m = 0; m <= j + 1; ++m) {
      double v = 0.0;
      if (m >= 1) v += std::sqrt(m / 2.0) * T[j][m - 1];
      v += std::sqrt((m + 1) / 2.0) * T[j][m + 1];
      T[j + 1][m] = v;
    }
  return T;
}

void expand_tensor(const std::vector<std::vector<double>>& q, const MultiIndex& alpha, cplx c, int axis,
                   std::vector<int>& expo, std::map<MultiIndex, cplx>& out) {
  if (axis == alpha.dim()) {
    out[MultiIndex(expo)] += c;
    return;
  }
  const auto& row = q[alpha[axis]];
  for (std::size_t j = 0; j < row.size(); ++j) {
    if (row[j] == 0.0) continue;
    expo[axis] = static_cast<int>(j);
    expand_tensor(q, alpha, c * row[j], axis + 1, expo, out);
  }
}

Eigen::MatrixXd half_identity(int n) { return 0.5 * Eigen::MatrixXd::Identity(n, n); }

// ---- quadrature transform for functions without an exact route ----

struct QuadratureTransform {
  int n = 1;
  std::vector<double> points;  // n coordinates per node
  std::vector<cplx> fw;        // f(x_i) * weight_i

  cplx operator()(std::span<const double> y) const {
    const std::size_t count = fw.size();
    cplx acc = 0.0;
    for (std::size_t i = 0; i < count; ++i) {
      double phase = 0.0;
      for (int j = 0; j < n; ++j) phase += points[i * n + j] * y[j];
      acc += fw[i] * cplx(std::cos(phase), -std::sin(phase));
    }
    return acc * std::pow(2.0 * kPi, -0.5 * n);
  }
};

std::shared_ptr<QuadratureTransform> build_transform(const TestFunction& f, double radius, double width) {
  auto rule = hermite::composite_legendre(-radius, radius, width, 10, {0.0});
  auto qt = std::make_shared<QuadratureTransform>();
  const int n = f.dim();
  qt->n = n;
  const std::size_t m = rule.size();
  std::vector<std::size_t> idx(n, 0);
  std::vector<double> x(n);
  for (;;) {
    double w = 1.0;
    for (int j = 0; j < n; ++j) {
      x[j] = rule.nodes[idx[j]];
      w *= rule.weights[idx[j]];
    }
    cplx v = f(x) * w;
    if (std::abs(v) > 1e-300) {
      qt->points.insert(qt->points.end(), x.begin(), x.end());
      qt->fw.push_back(v);
    }
    int j = 0;
    while (j < n && ++idx[j] == m) idx[j++] = 0;
    if (j == n) break;
  }
  return qt;
}

// decay of the transform of a chirped Gaussian class member, via
// FT(x^a g) = (i d/dy)^a FT(g) and FT(e^{-xCx}) = 2^{-n/2} det(C)^{-1/2} e^{-y C^{-1} y / 4}
DecayBound chirp_fourier_decay(const PolyGaussian& p) {
  const int n = p.dim();
  Eigen::MatrixXcd C = p.A().cast<cplx>() + cplx(0, 1) * p.B().cast<cplx>();
  Eigen::MatrixXcd D = C.inverse() / 4.0;
  std::vector<Polynomial> Dy;  // (D y)_j as linear forms
  for (int j = 0; j < n; ++j) {
    std::vector<cplx> row(n);
    for (int k = 0; k < n; ++k) row[k] = D(j, k);
    Dy.push_back(Polynomial::linear_form(row));
  }
  Polynomial Q(n);
  for (const auto& [alpha, c] : p.poly().terms()) {
    Polynomial q = Polynomial::constant(n, 1.0);
    for (int j = 0; j < n; ++j)
      for (int r = 0; r < alpha[j]; ++r) q = cplx(0, 1) * (q.derivative(j) - cplx(2.0) * (Dy[j] * q));
    Q = Q + c * q;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(D.real(), Eigen::EigenvaluesOnly);
  DecayBound b;
  b.kind = DecayKind::Gaussian;
  b.rate = es.eigenvalues().minCoeff();
  b.degree = Q.degree();
  double pref = std::pow(2.0, -0.5 * n) * std::pow(std::abs(C.determinant()), -0.5);
  double s = Q.abs_coefficient_sum();
  b.log_c = s > 0 ? std::log(pref * s) : -kInf;
  return b;
}

FourierResult quadrature_fourier(const TestFunction& f) {
  const int n = f.dim();
  DecayBound decay = f.decay_bound();
  std::optional<DecayBound> target;
  if (auto s = f.sampled()) target = s->fourier_decay;
  if (auto p = f.poly_gaussian()) target = chirp_fourier_decay(*p);

  const double radius = std::max(1.0, decay.radius_below(decay.log_c - 40.0));
  std::vector<std::vector<double>> probes;
  for (double t : {0.0, 0.5, 1.0, 2.0, 4.0, 8.0}) {
    std::vector<double> y(n, 0.0);
    y[0] = t;
    probes.push_back(y);
    if (n > 1) {
      std::vector<double> d(n, t / std::sqrt(static_cast<double>(n)));
      probes.push_back(d);
    }
  }
  double width = 0.5;
  auto coarse = build_transform(f, radius, width);
  double l1 = 0.0;
  for (auto v : coarse->fw) l1 += std::abs(v);
  FourierResult out{TestFunction(f), false, false, kInf};
  std::shared_ptr<QuadratureTransform> chosen = coarse;
  for (int level = 0; level < 3; ++level) {
    width *= 0.5;
    auto fine = build_transform(f, radius, width);
    double diff = 0.0;
    for (const auto& y : probes) diff = std::max(diff, std::abs((*fine)(y) - (*coarse)(y)));
    chosen = fine;
    out.error_estimate = diff;
    if (diff <= 1e-11 * std::max(l1, 1e-300)) {
      out.converged = true;
      break;
    }
    coarse = fine;
  }
  SampledFunction s;
  s.dim = n;
  s.eval = [qt = chosen](std::span<const double> y) { return (*qt)(y); };
  if (target) {
    s.decay = *target;
  } else {
    // only the trivial sup bound is known
    s.decay = DecayBound{DecayKind::Gaussian, std::log(l1) - 0.5 * n * std::log(2.0 * kPi), 0.0, 0};
  }
  s.fourier_decay = decay;  // transform of the transform is f(-x)
  s.log_noise_floor = std::log(1e-14 * l1 * std::pow(2.0 * kPi, -0.5 * n) + out.error_estimate);
  out.transform = TestFunction(std::move(s));
  return out;
}

}  // namespace

Polynomial hermite_to_polynomial(const HermiteExpansion& e) {
  const int n = e.dim();
  auto q = hermite_polys(std::max(e.max_degree(), 1));
  std::map<MultiIndex, cplx> terms;
  std::vector<int> expo(n, 0);
  for (const auto& [alpha, c] : e) expand_tensor(q, alpha, c, 0, expo, terms);
  return Polynomial(n, terms).pruned(1e-16);
}

PolyGaussian hermite_to_poly_gaussian(const HermiteExpansion& e) {
  return PolyGaussian(hermite_to_polynomial(e), half_identity(e.dim()));
}

HermiteExpansion poly_gaussian_to_hermite(const PolyGaussian& f) {
  if (!f.is_standard()) throw std::invalid_argument("poly_gaussian_to_hermite: requires A = I/2 and B = 0");
  const int n = f.dim();
  const int D = f.poly().degree();
  auto T = monomial_to_hermite(D);
  Coefficients out;
  for (const auto& alpha : enumerate_multi_indices(n, D)) {
    cplx acc = 0.0;
    for (const auto& [beta, p] : f.poly().terms()) {
      cplx term = p;
      for (int j = 0; j < n && term != 0.0; ++j) {
        // x^b e^{-x^2/2} only reaches h_k with k <= b and k = b (mod 2)
        int b = beta[j], k = alpha[j];
        term *= (k <= b) ? T[b][k] : 0.0;
      }
      acc += term;
    }
    if (acc != 0.0) out.emplace(alpha, acc);
  }
  return HermiteExpansion(n, out);
}

TestFunction canonical(TestFunction f) {
  if (auto p = f.poly_gaussian(); p && p->is_standard()) return TestFunction(poly_gaussian_to_hermite(*p));
  return f;
}

TestFunction dilate(const TestFunction& f, double delta) {
  if (!(delta > 0)) throw std::domain_error("dilate: delta must be positive");
  const int n = f.dim();
  const double amp = std::pow(delta, 0.5 * n);
  if (delta == 1.0) return f;
  if (f.hermite() || f.poly_gaussian()) {
    PolyGaussian p = f.hermite() ? hermite_to_poly_gaussian(*f.hermite()) : *f.poly_gaussian();
    Polynomial poly = cplx(amp) * p.poly().compose_linear(delta * Eigen::MatrixXd::Identity(n, n));
    Eigen::MatrixXd A = delta * delta * p.A(), B = delta * delta * p.B();
    // snap roundoff so that dilating back lands on the standard form exactly
    if ((A - half_identity(n)).cwiseAbs().maxCoeff() < 1e-14) A = half_identity(n);
    return canonical(TestFunction(PolyGaussian(poly, A, B)));
  }
  const SampledFunction& s = *f.sampled();
  SampledFunction out;
  out.dim = n;
  out.eval = [g = s.eval, delta, amp, n](std::span<const double> x) {
    std::vector<double> y(x.begin(), x.end());
    for (int j = 0; j < n; ++j) y[j] *= delta;
    return amp * g(y);
  };
  auto scaled = [&](DecayBound b, double d, double a) {
    b.log_c += std::log(a) + b.degree * std::log(std::max(1.0, d));
    b.rate *= b.kind == DecayKind::Gaussian ? d * d : d;
    return b;
  };
  out.decay = scaled(s.decay, delta, amp);
  if (s.fourier_decay) out.fourier_decay = scaled(*s.fourier_decay, 1.0 / delta, 1.0 / amp);
  if (s.log_noise_floor) out.log_noise_floor = *s.log_noise_floor + std::log(amp);
  return TestFunction(std::move(out));
}

FourierResult fourier(const TestFunction& f) {
  if (auto e = f.hermite()) return {TestFunction(hermite::fourier_diagonal(*e)), true, true, 0.0};
  if (auto p = f.poly_gaussian(); p && !p->chirped()) {
    // A = V L V^T; x = M u with M = V diag(1/sqrt(2 l)) turns (Ax,x) into |u|^2/2
    const int n = p->dim();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(p->A());
    const Eigen::VectorXd lam = es.eigenvalues();
    const Eigen::MatrixXd V = es.eigenvectors();
    Eigen::MatrixXd M = V * (2.0 * lam).cwiseSqrt().cwiseInverse().asDiagonal();
    PolyGaussian standard = PolyGaussian::standard(p->poly().compose_linear(M));
    HermiteExpansion hat = hermite::fourier_diagonal(poly_gaussian_to_hermite(standard));
    Polynomial H = hermite_to_polynomial(hat);
    Polynomial poly = cplx(std::abs(M.determinant())) * H.compose_linear(M.transpose());
    Eigen::MatrixXd Ainv = V * (4.0 * lam).cwiseInverse().asDiagonal() * V.transpose();
    Ainv = 0.5 * (Ainv + Ainv.transpose());
    if ((Ainv - half_identity(n)).cwiseAbs().maxCoeff() < 1e-14) Ainv = half_identity(n);
    return {canonical(TestFunction(PolyGaussian(poly, Ainv))), true, true, 0.0};
  }
  return quadrature_fourier(f);
}

HermiteExpansion make_ft_eigenfunction(int n, int max_degree, int k0, std::uint64_t seed, double decay) {
  if (k0 < 0 || k0 > 3) throw std::invalid_argument("make_ft_eigenfunction: k0 must be in {0,1,2,3}");
  if (max_degree < k0) throw std::invalid_argument("make_ft_eigenfunction: empty support (D < k0)");
  Rng rng(seed);
  Coefficients c;
  double norm2 = 0.0;
  for (const auto& alpha : enumerate_multi_indices(n, max_degree)) {
    if (alpha.order() % 4 != k0) continue;
    double v = rng.sign() * rng.uniform(0.5, 1.5) * std::exp(-decay * alpha.order());
    c.emplace(alpha, v);
    norm2 += v * v;
  }
  if (c.empty()) throw std::invalid_argument("make_ft_eigenfunction: empty support");
  double s = (c.begin()->second.real() < 0 ? -1.0 : 1.0) / std::sqrt(norm2);
  for (auto& [alpha, v] : c) v *= s;
  return HermiteExpansion(n, c);
}

HermiteExpansion random_expansion(int n, int max_degree, std::uint64_t seed) {
  Rng rng(seed);
  Coefficients c;
  double norm2 = 0.0;
  for (const auto& alpha : enumerate_multi_indices(n, max_degree)) {
    cplx v(rng.normal(), rng.normal());
    c.emplace(alpha, v);
    norm2 += std::norm(v);
  }
  for (auto& [alpha, v] : c) v /= std::sqrt(norm2);
  return HermiteExpansion(n, c);
}

HermiteExpansion random_phase_expansion(int n, int max_degree, std::uint64_t seed) {
  Rng rng(seed);
  Coefficients c;
  for (const auto& alpha : enumerate_multi_indices(n, max_degree))
    c.emplace(alpha, std::polar(1.0, 2.0 * kPi * rng.uniform()));
  return HermiteExpansion(n, c);
}

}  // namespace uplab::fmodel
