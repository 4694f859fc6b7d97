#include "uplab/envelopes/fits.hpp"

#include <cmath>
#include <set>
#include <stdexcept>
#include <vector>

#include "uplab/core/numeric.hpp"
#include "uplab/envelopes/envelope.hpp"

namespace uplab::envelopes {

std::string to_string(DecayLaw law) { return law == DecayLaw::SqrtExponential ? "sqrt-exponential" : "geometric"; }

DecayLaw decay_law_from_string(const std::string& s) {
  if (s == "sqrt-exponential" || s == "sqrt") return DecayLaw::SqrtExponential;
  if (s == "geometric") return DecayLaw::Geometric;
  throw std::invalid_argument("unknown decay law: " + s);
}

DecayFit decay_rate_fit(const hermite::HermiteExpansion& coeffs, DecayLaw law) {
  std::vector<double> xs, ys;
  std::set<int> orders;
  const double n = coeffs.dim();
  for (const auto& [alpha, c] : coeffs) {
    double m = std::abs(c);
    if (m < kExcludeBelow) continue;
    double energy = 2.0 * alpha.order() + n;
    xs.push_back(law == DecayLaw::SqrtExponential ? std::sqrt(energy) : 0.5 * energy);
    ys.push_back(-std::log(m));
    orders.insert(alpha.order());
  }
  if (xs.size() < 5 || orders.size() < 3)
    throw std::invalid_argument("decay_rate_fit: need >= 5 coefficients over >= 3 distinct orders");
  LineFit lf = fit_line(xs, ys);
  return {lf.slope, lf.intercept, lf.max_residual, static_cast<int>(xs.size())};
}

}  // namespace uplab::envelopes
