#pragma once

#include <string>

#include "uplab/hermite/expansion.hpp"

namespace uplab::envelopes {

enum class DecayLaw {
  SqrtExponential,  // |c| ~ e^{-t (2|a|+n)^{1/2}}
  Geometric,        // |c| ~ e^{-t (2|a|+n)/2}
};

std::string to_string(DecayLaw law);
DecayLaw decay_law_from_string(const std::string& s);

struct DecayFit {
  double t = 0.0;  // slope of -log|c| against the law's statistic
  double intercept = 0.0;
  double residual = 0.0;  // max |deviation| in -log|c|
  int samples = 0;
};

// Needs >= 5 coefficients at or above 1e-13 over >= 3 distinct orders,
// otherwise std::invalid_argument.
DecayFit decay_rate_fit(const hermite::HermiteExpansion& coeffs, DecayLaw law);

}  // namespace uplab::envelopes
