#include "uplab/envelopes/envelope.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

#include "uplab/core/numeric.hpp"

namespace uplab::envelopes {

std::string to_string(EnvelopeKind k) {
  switch (k) {
    case EnvelopeKind::FtEigenfunction: return "eigenfunction";
    case EnvelopeKind::Onfinite: return "onfinite";
    case EnvelopeKind::ExpDecay: return "expdecay";
    case EnvelopeKind::Entire: return "entire";
    case EnvelopeKind::VemuriHardy: return "vemuri-hardy";
    case EnvelopeKind::HardyPointwise: return "hardy-pointwise";
  }
  return "?";
}

EnvelopeKind envelope_kind_from_string(const std::string& s) {
  for (auto k : {EnvelopeKind::FtEigenfunction, EnvelopeKind::Onfinite, EnvelopeKind::ExpDecay, EnvelopeKind::Entire,
                 EnvelopeKind::VemuriHardy, EnvelopeKind::HardyPointwise})
    if (to_string(k) == s) return k;
  throw std::invalid_argument("unknown envelope kind: " + s);
}

double t_from_a(double a) {
  if (!(a > 0.0 && a < 1.0)) throw std::domain_error("t_from_a: need 0 < a < 1");
  return 0.5 * std::atanh(a);
}

DecayEnvelope::DecayEnvelope(EnvelopeKind kind, int n, EnvelopeParams params)
    : kind_(kind), n_(n), params_(params) {
  if (n < 1) throw std::invalid_argument("envelope: dimension must be >= 1");
  if (kind == EnvelopeKind::VemuriHardy && n != 1) throw std::invalid_argument("envelope: vemuri-hardy is one-dimensional");
  if (params.t && params.a && std::abs(std::tanh(2.0 * *params.t) - *params.a) > 1e-12)
    throw std::invalid_argument("envelope: a and t are not linked by a = tanh(2t)");
  if (params.t)
    t_ = *params.t;
  else if (params.a)
    t_ = t_from_a(*params.a);
  else
    throw std::invalid_argument("envelope: missing parameter t (or a)");
  if (!(t_ > 0)) throw std::invalid_argument("envelope: t must be positive");
  if (kind == EnvelopeKind::FtEigenfunction && !params.ka)
    throw std::invalid_argument("envelope: eigenfunction kind needs K_a");
  if (params.ka && !(*params.ka > 0)) throw std::invalid_argument("envelope: K_a must be positive");
  if (!(params.c > 0)) throw std::invalid_argument("envelope: C must be positive");
}

double DecayEnvelope::log_value(const MultiIndex& alpha) const {
  if (alpha.dim() != n_) throw std::invalid_argument("envelope: index dimension mismatch");
  const double n = n_, t = t_;
  const double energy = 2.0 * alpha.order() + n;  // 2|alpha| + n
  double sum_log_odd = 0.0, sum_sqrt_odd = 0.0;
  for (int j = 0; j < n_; ++j) {
    sum_log_odd += std::log(2.0 * alpha[j] + 1.0);
    sum_sqrt_odd += std::sqrt(2.0 * alpha[j] + 1.0);
  }
  const double lc = std::log(params_.c);
  switch (kind_) {
    case EnvelopeKind::FtEigenfunction:
      return 0.5 * t + 0.5 * std::log(*params_.ka) + sum_log_odd / (4.0 * n) - energy * t / (2.0 * n);
    case EnvelopeKind::Onfinite: return lc + 0.25 * sum_log_odd - 0.5 * energy * t;
    case EnvelopeKind::ExpDecay: return lc - t / std::sqrt(2.0 * n) * sum_sqrt_odd;
    case EnvelopeKind::Entire: return lc - t * std::sqrt(energy);
    case EnvelopeKind::VemuriHardy: return lc - 0.25 * std::log(energy) - 0.5 * energy * t;
    case EnvelopeKind::HardyPointwise: return lc - 0.5 * energy * t;
  }
  return 0.0;
}

double DecayEnvelope::operator()(const MultiIndex& alpha) const { return std::exp(log_value(alpha)); }

DecayEnvelopeReport envelope_check(const HermiteExpansion& coeffs, const DecayEnvelope& env) {
  if (coeffs.empty()) throw std::invalid_argument("envelope_check: no coefficients");
  if (coeffs.dim() != env.dim()) throw std::invalid_argument("envelope_check: dimension mismatch");
  DecayEnvelopeReport rep;
  std::vector<double> xs, ys;
  std::set<int> orders;
  rep.max_log_ratio = -kInf;
  for (const auto& [alpha, c] : coeffs) {  // map order is graded-lex
    double m = std::abs(c);
    if (m < kExcludeBelow) continue;
    double le = env.log_value(alpha);
    double lr = std::log(m) - le;
    rep.rows.push_back({alpha, m, std::exp(le), lr});
    rep.max_log_ratio = std::max(rep.max_log_ratio, lr);
    xs.push_back(alpha.order());
    ys.push_back(lr);
    orders.insert(alpha.order());
  }
  if (rep.rows.empty()) throw std::invalid_argument("envelope_check: every coefficient is below the exclusion threshold");
  rep.slope = orders.size() >= 2 ? fit_line(xs, ys).slope : 0.0;
  rep.dominated = std::isfinite(rep.max_log_ratio) && rep.slope <= kSlopeTolerance;
  return rep;
}

}  // namespace uplab::envelopes
