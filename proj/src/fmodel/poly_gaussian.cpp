#include "uplab/fmodel/poly_gaussian.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "uplab/core/numeric.hpp"

namespace uplab::fmodel {

double DecayBound::log_bound(double r) const {
  double tail = kind == DecayKind::Gaussian ? rate * r * r : rate * r;
  return log_c + degree * std::log1p(r) - tail;
}

double DecayBound::radius_below(double level) const {
  if (!(rate > 0)) throw std::domain_error("DecayBound: no decay, truncation radius undefined");
  // past the turning point log_bound is decreasing; walk out then bisect
  double r_turn = 0.0;
  if (degree > 0)
    r_turn = kind == DecayKind::Gaussian ? std::sqrt(degree / (2.0 * rate)) : degree / rate;
  double lo = r_turn, hi = std::max(1.0, 2.0 * r_turn);
  if (log_bound(lo) <= level) return lo;
  while (log_bound(hi) > level) hi *= 2.0;
  for (int it = 0; it < 80; ++it) {
    double mid = 0.5 * (lo + hi);
    (log_bound(mid) > level ? lo : hi) = mid;
  }
  return hi;
}

bool is_positive_definite(const Eigen::MatrixXd& A) {
  for (int k = 1; k <= A.rows(); ++k)
    if (!(A.topLeftCorner(k, k).determinant() > 0.0)) return false;
  return true;
}

PolyGaussian::PolyGaussian(Polynomial poly, Eigen::MatrixXd A)
    : PolyGaussian(std::move(poly), A, Eigen::MatrixXd::Zero(A.rows(), A.cols())) {}

PolyGaussian::PolyGaussian(Polynomial poly, Eigen::MatrixXd A, Eigen::MatrixXd B)
    : poly_(std::move(poly)), A_(std::move(A)), B_(std::move(B)) {
  const int n = poly_.dim();
  if (A_.rows() != n || A_.cols() != n || B_.rows() != n || B_.cols() != n)
    throw std::invalid_argument("PolyGaussian: matrix size does not match polynomial dimension");
  const double scale = 1.0 + A_.cwiseAbs().maxCoeff();
  if ((A_ - A_.transpose()).cwiseAbs().maxCoeff() > 1e-14 * scale)
    throw std::invalid_argument("PolyGaussian: A must be symmetric");
  if ((B_ - B_.transpose()).cwiseAbs().maxCoeff() > 1e-14 * (1.0 + B_.cwiseAbs().maxCoeff()))
    throw std::invalid_argument("PolyGaussian: B must be symmetric");
  A_ = 0.5 * (A_ + A_.transpose());
  B_ = 0.5 * (B_ + B_.transpose());
  if (!is_positive_definite(A_)) throw std::invalid_argument("PolyGaussian: A must be positive definite");
}

PolyGaussian PolyGaussian::standard(Polynomial poly) {
  const int n = poly.dim();
  return PolyGaussian(std::move(poly), 0.5 * Eigen::MatrixXd::Identity(n, n));
}

bool PolyGaussian::is_standard() const {
  const int n = dim();
  return A_ == 0.5 * Eigen::MatrixXd::Identity(n, n) && B_.isZero(0.0);
}

cplx PolyGaussian::operator()(std::span<const double> x) const {
  Eigen::Map<const Eigen::VectorXd> v(x.data(), static_cast<Eigen::Index>(x.size()));
  double qa = v.dot(A_ * v), qb = v.dot(B_ * v);
  return poly_(x) * std::exp(cplx(-qa, -qb));
}

double PolyGaussian::log_abs(std::span<const double> x) const {
  Eigen::Map<const Eigen::VectorXd> v(x.data(), static_cast<Eigen::Index>(x.size()));
  double p = std::abs(poly_(x));
  return p == 0.0 ? -kInf : std::log(p) - v.dot(A_ * v);
}

DecayBound PolyGaussian::decay_bound() const {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(A_, Eigen::EigenvaluesOnly);
  DecayBound b;
  b.kind = DecayKind::Gaussian;
  b.rate = es.eigenvalues().minCoeff();
  b.degree = poly_.degree();
  double s = poly_.abs_coefficient_sum();
  b.log_c = s > 0 ? std::log(s) : -kInf;
  return b;
}

}  // namespace uplab::fmodel
