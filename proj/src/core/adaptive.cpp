#include "uplab/core/adaptive.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "uplab/core/numeric.hpp"

namespace uplab {
namespace {

struct Gk21 {
  std::array<double, 21> x{}, wk{}, wg{};
};

const Gk21& gk21() {
  static const Gk21 table = [] {
    using boost::math::quadrature::gauss;
    using boost::math::quadrature::gauss_kronrod;
    const auto& abs = gauss_kronrod<double, 21>::abscissa();
    const auto& wk = gauss_kronrod<double, 21>::weights();
    const auto& wg = gauss<double, 10>::weights();
    Gk21 t;
    t.x[0] = 0.0;
    t.wk[0] = wk[0];
    t.wg[0] = 0.0;
    for (int i = 1; i <= 10; ++i) {
      double g = (i % 2 == 1) ? wg[i / 2] : 0.0;
      t.x[2 * i - 1] = abs[i];
      t.x[2 * i] = -abs[i];
      t.wk[2 * i - 1] = t.wk[2 * i] = wk[i];
      t.wg[2 * i - 1] = t.wg[2 * i] = g;
    }
    return t;
  }();
  return table;
}

struct Interval {
  double lo, hi;
  double value, error;
  int level;
  bool operator<(const Interval& o) const { return error < o.error; }
};

struct NeedsShift {
  double new_shift;
};

Interval evaluate(const std::function<double(double)>& log_f, double lo, double hi, int level,
                  double shift, long& evals) {
  const Gk21& t = gk21();
  const double c = 0.5 * (lo + hi), h = 0.5 * (hi - lo);
  std::array<double, 21> fv{};
  double kr = 0, ga = 0, resabs = 0;
  double max_log = -kInf;
  for (int i = 0; i < 21; ++i) {
    double l = log_f(c + h * t.x[i]);
    ++evals;
    if (std::isnan(l)) throw std::runtime_error("integrate_log: integrand returned NaN");
    max_log = std::max(max_log, l);
    fv[i] = std::exp(l - shift);
    kr += t.wk[i] * fv[i];
    ga += t.wg[i] * fv[i];
    resabs += t.wk[i] * std::abs(fv[i]);
  }
  if (max_log - shift > 600.0) throw NeedsShift{max_log};
  double mean = 0.5 * kr, resasc = 0;
  for (int i = 0; i < 21; ++i) resasc += t.wk[i] * std::abs(fv[i] - mean);
  kr *= h;
  ga *= h;
  resabs *= std::abs(h);
  resasc *= std::abs(h);
  double err = std::abs(kr - ga);
  if (resasc != 0.0 && err != 0.0) err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  const double eps = std::numeric_limits<double>::epsilon();
  err = std::max(err, 50.0 * eps * resabs);
  return {lo, hi, kr, err, level};
}

}  // namespace

LogIntegral integrate_log(const std::function<double(double)>& log_f, double lo, double hi,
                          std::vector<double> breakpoints, const AdaptiveOptions& opts) {
  if (!(hi > lo)) throw std::invalid_argument("integrate_log: empty interval");
  std::vector<double> pts{lo, hi};
  for (double b : breakpoints)
    if (b > lo && b < hi) pts.push_back(b);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  LogIntegral out;
  double shift = -kInf;
  for (std::size_t s = 0; s + 1 < pts.size(); ++s)
    for (int j = 0; j <= opts.prescan_per_segment; ++j) {
      double x = pts[s] + (pts[s + 1] - pts[s]) * j / opts.prescan_per_segment;
      shift = std::max(shift, log_f(x));
      ++out.evaluations;
    }
  if (shift == -kInf) shift = 0.0;

  for (int attempt = 0; attempt < 8; ++attempt) {
    try {
      std::priority_queue<Interval> heap;
      for (std::size_t s = 0; s + 1 < pts.size(); ++s)
        heap.push(evaluate(log_f, pts[s], pts[s + 1], 0, shift, out.evaluations));
      auto totals = [&heap] {
        auto copy = heap;
        NeumaierSum v, e;
        while (!copy.empty()) {
          v.add(copy.top().value);
          e.add(copy.top().error);
          copy.pop();
        }
        return std::pair{v.value(), e.value()};
      };
      auto [value, error] = totals();
      int depth = 0;
      const double min_width = 1e-13 * (hi - lo);
      while (error > opts.reltol * value && static_cast<int>(heap.size()) < opts.max_intervals) {
        Interval worst = heap.top();
        if (worst.hi - worst.lo < min_width) break;
        heap.pop();
        double mid = 0.5 * (worst.lo + worst.hi);
        Interval left = evaluate(log_f, worst.lo, mid, worst.level + 1, shift, out.evaluations);
        Interval right = evaluate(log_f, mid, worst.hi, worst.level + 1, shift, out.evaluations);
        depth = std::max(depth, worst.level + 1);
        value += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
        // the running update drifts; resync now and then
        if (heap.size() % 64 == 0) std::tie(value, error) = totals();
      }
      std::tie(value, error) = totals();
      out.depth = depth;
      out.converged = error <= opts.reltol * value;
      out.log_value = value > 0 ? std::log(value) + shift : -kInf;
      out.rel_error = value > 0 ? error / value : 0.0;
      if (value <= 0) out.converged = true;
      return out;
    } catch (const NeedsShift& ns) {
      shift = ns.new_shift;
    }
  }
  throw std::runtime_error("integrate_log: could not stabilise the exponent shift");
}

}  // namespace uplab
