#include "uplab/heisenberg/kaverage.hpp"

#include <cmath>
#include <stdexcept>

#include "uplab/core/numeric.hpp"
#include "uplab/core/parallel.hpp"
#include "uplab/heisenberg/laguerre.hpp"

namespace uplab::heisenberg {

KAverageReport kaverage_identity_check(const HermiteExpansion& f, double y, double v, int K, int angles, int nodes) {
  if (f.dim() != 1) throw std::domain_error("kaverage_identity_check: one-dimensional only");
  if (K < f.max_degree()) throw std::invalid_argument("kaverage_identity_check: K below the degree of f");
  if (angles < 1 || nodes < 1) throw std::invalid_argument("kaverage_identity_check: bad rule sizes");

  KAverageReport rep;
  NeumaierSum rhs;
  for (const auto& [alpha, c] : f)
    if (alpha[0] <= K) rhs.add(std::norm(c) * laguerre_phi_imag(alpha[0], 0, y, v));
  rep.rhs = rhs.value();

  // |pi(iy', iv') f(xi)|^2 = e^{-2 y' xi} |f(xi + i v')|^2 carries e^{-(xi + y')^2}
  auto average = [&](int m) {
    std::vector<double> per(angles);
    fmodel::TestFunction ff(f);
    parallel_for(static_cast<std::size_t>(angles), [&](std::size_t k) {
      const double th = 2.0 * kPi * k / angles;
      const double yk = y * std::cos(th) - v * std::sin(th), vk = y * std::sin(th) + v * std::cos(th);
      auto g = schrodinger_apply(ff, GroupElement::imaginary({yk}, {vk}));
      const double centre = -yk;
      per[k] = l2_norm_squared(g, std::span<const double>(&centre, 1), m);
    });
    NeumaierSum s;
    for (double p : per) s.add(p);
    return s.value() / angles;
  };
  rep.lhs = average(nodes);
  const double check = average(2 * nodes);
  rep.converged = std::abs(check - rep.lhs) <= 1e-12 * std::abs(check);
  rep.rel_dev = std::abs(rep.lhs - rep.rhs) / std::max(std::abs(rep.rhs), 1e-300);
  return rep;
}

}  // namespace uplab::heisenberg
