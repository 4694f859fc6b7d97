#pragma once

#include "uplab/fmodel/polynomial.hpp"
#include "uplab/fmodel/test_function.hpp"
#include "uplab/functional/pair_integral.hpp"

namespace uplab::functional {

// K_a(f) = int int |f(x)| |f^(y)| e^{a|x.y|} dx dy, 0 <= a < 1, n in {1, 2}.
FunctionalResult ka_eval(const fmodel::TestFunction& f, double a, double reltol = 1e-9, bool split_orthants = true);

// 2^{(j+k+2)/2} sum_l C(k,l) G((j+l+1)/2) G((k-l+1)/2) a^l (1-a^2)^{-(j+l+1)/2}
// Dominates the x^j y^k integral with weight e^{a x y}; with e^{a|xy|} only twice it does.
double e_monomial_bound(int j, int k, double a);

// E(R,S,a) = int int |R(x)| |S(y)| e^{-|x|^2/2 - |y|^2/2} e^{a|x.y|} dx dy
FunctionalResult e_poly_quad(const fmodel::Polynomial& R, const fmodel::Polynomial& S, double a,
                             double reltol = 1e-9, bool split_orthants = true);

// int int |f| |f^| e^{|x.y|} (1+|x|+|y|)^{-N} over nested boxes (n = 1).
// divergent: box sums grow by more than 2x over 4 consecutive doublings.
// converged: increments shrink and the geometric tail estimate is below reltol.
// inconclusive: neither within the largest box.
FunctionalResult weighted_bdj(const fmodel::TestFunction& f, double N, double reltol = 1e-3);

enum class MomentOrder { Linear, None };

// int |f(x)| e^{t|x|} dx (MomentOrder::None drops the exponential), n in {1, 2}.
FunctionalResult exp_moment(const fmodel::TestFunction& f, double t, MomentOrder order = MomentOrder::Linear,
                            double reltol = 1e-10);

}  // namespace uplab::functional
