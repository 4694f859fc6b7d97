#pragma once

#include <span>

#include <Eigen/Dense>

#include "uplab/fmodel/polynomial.hpp"

namespace uplab::fmodel {

enum class DecayKind { Gaussian, Exponential };

// |f(x)| <= e^{log_c} (1+|x|)^degree e^{-rate |x|^2}   (Gaussian)
// |f(x)| <= e^{log_c} (1+|x|)^degree e^{-rate |x|}     (Exponential)
struct DecayBound {
  DecayKind kind = DecayKind::Gaussian;
  double log_c = 0.0;
  double rate = 0.0;
  int degree = 0;

  double log_bound(double r) const;
  // Smallest R with log_bound(r) <= level for all r >= R (needs rate > 0).
  double radius_below(double level) const;
};

// P(x) exp(-((A + iB)x, x)) with A symmetric positive definite, B symmetric.
class PolyGaussian {
 public:
  PolyGaussian(Polynomial poly, Eigen::MatrixXd A);
  PolyGaussian(Polynomial poly, Eigen::MatrixXd A, Eigen::MatrixXd B);

  // P e^{-|x|^2/2}
  static PolyGaussian standard(Polynomial poly);

  int dim() const { return poly_.dim(); }
  const Polynomial& poly() const { return poly_; }
  const Eigen::MatrixXd& A() const { return A_; }
  const Eigen::MatrixXd& B() const { return B_; }
  bool chirped() const { return !B_.isZero(0.0); }
  bool is_standard() const;  // A = I/2 and B = 0

  cplx operator()(std::span<const double> x) const;
  double log_abs(std::span<const double> x) const;
  DecayBound decay_bound() const;

 private:
  Polynomial poly_;
  Eigen::MatrixXd A_, B_;
};

// Leading-principal-minor test.
bool is_positive_definite(const Eigen::MatrixXd& A);

}  // namespace uplab::fmodel
