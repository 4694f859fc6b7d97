#pragma once

#include <memory>
#include <vector>

namespace uplab::hermite {

enum class WeightFunction { Hermite, MappedSemiInfinite, LegendrePanel };

struct QuadratureRule {
  std::vector<double> nodes;    // strictly increasing
  std::vector<double> weights;  // positive; against the rule's weight function
  // Weights for plain integrals, sum plain[i] g(x_i) ~ int g dx. For the Hermite
  // rule this is weights[i] e^{x_i^2}; for the others it equals weights.
  std::vector<double> plain;
  WeightFunction weightfun = WeightFunction::LegendrePanel;

  std::size_t size() const { return nodes.size(); }
};

// m-point Gauss rule for weight e^{-x^2} (Golub-Welsch, Newton-polished nodes).
// Rules are cached; the returned object is immutable.
std::shared_ptr<const QuadratureRule> gauss_hermite_rule(int m);

// m-point Gauss-Legendre rule on [-1, 1].
std::shared_ptr<const QuadratureRule> gauss_legendre_rule(int m);

// Gauss-Legendre mapped onto [0, inf) by x = L (1+u)/(1-u).
QuadratureRule semi_infinite_rule(int m, double length_scale);

// Composite Gauss-Legendre on [lo, hi] with panels of width <= max_width and
// panel boundaries at every breakpoint inside the interval.
QuadratureRule composite_legendre(double lo, double hi, double max_width, int points_per_panel,
                                  const std::vector<double>& breakpoints = {});

}  // namespace uplab::hermite
