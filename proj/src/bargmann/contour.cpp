#include "uplab/bargmann/contour.hpp"

#include <cmath>
#include <stdexcept>

#include "uplab/core/numeric.hpp"
#include "uplab/core/parallel.hpp"

namespace uplab::bargmann {

TaylorCoefficients contour_taylor(const EntireFunction& F, int n, std::vector<double> radii, int max_degree,
                                  int points) {
  if (n < 1 || max_degree < 0) throw std::invalid_argument("contour_taylor: bad dimension or degree");
  if (radii.size() == 1 && n > 1) radii.assign(n, radii[0]);
  if (static_cast<int>(radii.size()) != n) throw std::invalid_argument("contour_taylor: one radius per axis");
  for (double r : radii)
    if (!(r > 0)) throw std::invalid_argument("contour_taylor: radii must be positive");
  const int M = points > 0 ? points : 2 * max_degree + 16;
  if (max_degree >= M) throw std::invalid_argument("contour_taylor: requested index not below the grid size");

  std::size_t total = 1;
  for (int j = 0; j < n; ++j) total *= M;
  std::vector<cplx> values(total);
  parallel_for(total, [&](std::size_t flat) {
    std::vector<cplx> z(n);
    std::size_t rest = flat;
    for (int j = 0; j < n; ++j) {
      z[j] = std::polar(radii[j], 2.0 * kPi * static_cast<double>(rest % M) / M);
      rest /= M;
    }
    values[flat] = F(z);
  });

  // separable DFT, axis by axis: bins[k] = M^{-1} sum_l v[l] e^{-2 pi i k l / M}
  std::vector<cplx> twiddle(M);
  for (int k = 0; k < M; ++k) twiddle[k] = std::polar(1.0, -2.0 * kPi * k / M);
  std::size_t stride = 1;
  for (int j = 0; j < n; ++j) {
    std::vector<cplx> out(total);
    for (std::size_t base = 0; base < total; ++base) {
      if ((base / stride) % M != 0) continue;
      for (int k = 0; k < M; ++k) {
        cplx acc = 0.0;
        for (int l = 0; l < M; ++l) acc += values[base + l * stride] * twiddle[(static_cast<long>(k) * l) % M];
        out[base + k * stride] = acc / static_cast<double>(M);
      }
    }
    values = std::move(out);
    stride *= M;
  }

  TaylorCoefficients tc;
  tc.dim = n;
  tc.radii = radii;
  tc.points = M;
  for (std::size_t flat = 0; flat < total; ++flat) {
    std::vector<int> k(n);
    std::size_t rest = flat;
    int order = 0;
    bool beyond = false;
    for (int j = 0; j < n; ++j) {
      k[j] = static_cast<int>(rest % M);
      rest /= M;
      order += k[j];
      beyond = beyond || k[j] > max_degree;
    }
    if (beyond) {
      tc.aliasing = std::max(tc.aliasing, std::abs(values[flat]));
      continue;
    }
    if (order > max_degree) continue;
    double log_r = 0.0;
    for (int j = 0; j < n; ++j) log_r += k[j] * std::log(radii[j]);
    tc.coeffs.emplace(MultiIndex(k), values[flat] * std::exp(-log_r));
  }
  return tc;
}

TaylorCoefficients contour_taylor(const EntireFunctionHandle& F, std::vector<double> radii, int max_degree,
                                  int points) {
  return contour_taylor([&F](std::span<const cplx> z) { return F(z); }, F.dim(), std::move(radii), max_degree,
                        points);
}

std::vector<double> balanced_radii(const MultiIndex& alpha) {
  std::vector<double> r(alpha.dim());
  for (int j = 0; j < alpha.dim(); ++j) r[j] = std::sqrt(2.0 * alpha[j] + 1.0);
  return r;
}

cplx contour_coefficient(const EntireFunctionHandle& F, const MultiIndex& alpha, int points) {
  int top = 0;
  for (int j = 0; j < alpha.dim(); ++j) top = std::max(top, alpha[j]);
  // only the per-axis degree matters for aliasing, so ask for the box up to alpha
  TaylorCoefficients tc = contour_taylor(F, balanced_radii(alpha), top * alpha.dim(),
                                         points > 0 ? points : 2 * top * alpha.dim() + 16);
  return tc.coeffs.at(alpha);
}

double bridge_log_factor(const MultiIndex& alpha) {
  double l = 0.5 * log_bargmann_norm(alpha.entries());
  if (l > 700.0) throw std::overflow_error("coefficient bridge: factor overflows at " + alpha.to_string());
  return l;
}

HermiteExpansion hermite_from_taylor(int n, const std::map<MultiIndex, cplx>& taylor) {
  hermite::Coefficients c;
  for (const auto& [alpha, t] : taylor) {
    if (alpha.dim() != n) throw std::invalid_argument("coefficient bridge: dimension mismatch");
    if (t == 0.0) continue;
    double lt = std::log(std::abs(t)) + bridge_log_factor(alpha);
    if (lt > 700.0) throw std::overflow_error("coefficient bridge: value overflows at " + alpha.to_string());
    c[alpha] = std::polar(std::exp(lt), std::arg(t));
  }
  return HermiteExpansion(n, c);
}

std::map<MultiIndex, cplx> taylor_from_hermite(const HermiteExpansion& e) {
  std::map<MultiIndex, cplx> out;
  for (const auto& [alpha, c] : e) out[alpha] = c * std::exp(-bridge_log_factor(alpha));
  return out;
}

}  // namespace uplab::bargmann
