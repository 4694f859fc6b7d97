#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <random>
#include <span>
#include <vector>

namespace uplab {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Compensated (Neumaier) summation.
class NeumaierSum {
 public:
  void add(double x) {
    double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x))
      comp_ += (sum_ - t) + x;
    else
      comp_ += (x - t) + sum_;
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

// log(sum exp(v_i)); returns -inf for an empty or all -inf input.
double log_sum_exp(std::span<const double> v);

// log(e^a + e^b)
double log_add(double a, double b);

double log_factorial(int k);

// log(2^a a! pi^{n/2}) for a multi-index given by its entries.
double log_bargmann_norm(std::span<const int> entries);

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  double max_residual = 0.0;  // max |y_i - (slope x_i + intercept)|
};

// Ordinary least squares y ~ slope x + intercept. Needs two distinct x.
LineFit fit_line(std::span<const double> xs, std::span<const double> ys);

// mt19937_64 with a portable mapping to doubles; the std distributions are
// implementation-defined, which would break report determinism across toolchains.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  double normal();
  double sign() { return uniform() < 0.5 ? -1.0 : 1.0; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace uplab
