#pragma once

#include <optional>
#include <string>
#include <vector>

#include "uplab/hermite/expansion.hpp"

namespace uplab::envelopes {

using hermite::HermiteExpansion;
using hermite::MultiIndex;

enum class EnvelopeKind {
  FtEigenfunction,  // e^{t/2} K^{1/2} prod (2a_j+1)^{1/(4n)} e^{-(2|a|+n)t/(2n)}
  Onfinite,         // C prod (2a_j+1)^{1/4} e^{-(2|a|+n)t/2}
  ExpDecay,         // C prod e^{-t (2a_j+1)^{1/2} / sqrt(2n)}
  Entire,           // C e^{-t (2|a|+n)^{1/2}}
  VemuriHardy,      // C (2k+1)^{-1/4} e^{-(2k+1)t/2}, n = 1
  HardyPointwise,   // C e^{-(2|a|+n)t/2}
};

std::string to_string(EnvelopeKind k);
EnvelopeKind envelope_kind_from_string(const std::string& s);

struct EnvelopeParams {
  std::optional<double> a;   // linked to t by a = tanh(2t)
  std::optional<double> t;
  std::optional<double> ka;  // K_a(f), eigenfunction kind only
  double c = 1.0;
};

class DecayEnvelope {
 public:
  // Missing required parameters, or a and t both given but not linked to
  // 1e-12, throw std::invalid_argument.
  DecayEnvelope(EnvelopeKind kind, int n, EnvelopeParams params);

  EnvelopeKind kind() const { return kind_; }
  int dim() const { return n_; }
  double t() const { return t_; }
  const EnvelopeParams& params() const { return params_; }

  double log_value(const MultiIndex& alpha) const;
  double operator()(const MultiIndex& alpha) const;

 private:
  EnvelopeKind kind_;
  int n_;
  EnvelopeParams params_;
  double t_ = 0.0;
};

// t with a = tanh(2t)
double t_from_a(double a);

struct EnvelopeRow {
  MultiIndex alpha;
  double measured;
  double envelope;
  double log_ratio;
};

struct DecayEnvelopeReport {
  std::vector<EnvelopeRow> rows;  // graded-lex order
  double max_log_ratio = 0.0;
  double slope = 0.0;  // least squares of log_ratio against |alpha|
  bool dominated = false;
};

inline constexpr double kExcludeBelow = 1e-13;
inline constexpr double kSlopeTolerance = 0.01;

// dominated: max log-ratio finite and slope <= 0.01. Coefficients below 1e-13
// are left out; slope is 0 when fewer than two orders remain.
DecayEnvelopeReport envelope_check(const HermiteExpansion& coeffs, const DecayEnvelope& env);

}  // namespace uplab::envelopes
