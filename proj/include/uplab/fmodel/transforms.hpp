#pragma once

#include <cstdint>

#include "uplab/fmodel/test_function.hpp"

namespace uplab::fmodel {

// f = Q(x) e^{-|x|^2/2}: the polynomial factor Q of a Hermite expansion.
Polynomial hermite_to_polynomial(const HermiteExpansion& e);
PolyGaussian hermite_to_poly_gaussian(const HermiteExpansion& e);

// Exact change of basis; requires A = I/2 and B = 0.
HermiteExpansion poly_gaussian_to_hermite(const PolyGaussian& f);

// Standard-form PolyGaussians become FiniteHermite; everything else is returned as is.
TestFunction canonical(TestFunction f);

// f_delta(x) = delta^{n/2} f(delta x)
TestFunction dilate(const TestFunction& f, double delta);

struct FourierResult {
  TestFunction transform;
  bool exact = false;
  bool converged = false;
  double error_estimate = 0.0;  // 0 for exact transforms
};

// (2 pi)^{-n/2} int f(x) e^{-i x.y} dx. Exact for FiniteHermite and for
// PolyGaussian with B = 0; tensor composite Gauss-Legendre otherwise.
FourierResult fourier(const TestFunction& f);

// Unit-norm expansion supported on |alpha| = k0 (mod 4), |alpha| <= D, so that
// F f = (-i)^{k0} f. Magnitudes follow e^{-decay |alpha|} modulated by seeded
// factors in [0.5, 1.5] with random signs; the lowest index gets a positive sign.
HermiteExpansion make_ft_eigenfunction(int n, int max_degree, int k0, std::uint64_t seed, double decay = 0.6);

// Unit-norm expansion with independent complex normal coefficients, |alpha| <= D.
HermiteExpansion random_expansion(int n, int max_degree, std::uint64_t seed);

// Unit-modulus coefficients with seeded phases, |alpha| <= D (not normalized).
HermiteExpansion random_phase_expansion(int n, int max_degree, std::uint64_t seed);

}  // namespace uplab::fmodel
