#pragma once

#include <functional>
#include <span>
#include <vector>

#include "uplab/fmodel/test_function.hpp"

namespace uplab::functional {

struct FunctionalResult {
  double value = 0.0;      // +inf when divergent
  double log_value = 0.0;  // log(value); finite even when value overflows
  double error = 0.0;      // absolute error estimate
  bool converged = false;
  int depth = 0;
  bool divergent = false;
  bool inconclusive = false;
};

// One factor of the pair integrand |w(x)| |v(y)| e^{a|x.y|}.
struct Marginal {
  int dim = 1;
  std::function<double(std::span<const double>)> log_abs;
  fmodel::DecayBound decay;
  std::vector<double> breakpoints;  // n = 1: zeros of the factor on the line
};

Marginal marginal_of(const fmodel::TestFunction& f);

struct PairOptions {
  double reltol = 1e-9;
  bool split_orthants = true;  // breakpoints at the coordinate hyperplanes
  double weight_power = 0.0;   // extra factor (1+|x|+|y|)^{-N}, n = 1 only
  double box_radius = 0.0;     // > 0: integrate over [-R,R]^2 instead of derived radii
};

// int int |w(x)| |v(y)| e^{a|x.y|} dx dy for n in {1, 2}.
FunctionalResult pair_integral(const Marginal& w, const Marginal& v, double a, const PairOptions& opts);

}  // namespace uplab::functional
