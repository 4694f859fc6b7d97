#include <cmath>
#include <cstdio>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "uplab/bargmann/bargmann.hpp"
#include "uplab/bargmann/contour.hpp"
#include "uplab/bargmann/product_estimate.hpp"
#include "uplab/envelopes/envelope.hpp"
#include "uplab/envelopes/fits.hpp"
#include "uplab/fmodel/transforms.hpp"
#include "uplab/functional/functionals.hpp"
#include "uplab/functional/scaling.hpp"
#include "uplab/heisenberg/kaverage.hpp"
#include "uplab/heisenberg/schrodinger.hpp"
#include "uplab/hermite/expansion.hpp"
#include "uplab/lab/experiments.hpp"
#include "uplab/lab/function_spec.hpp"
#include "uplab/lab/runner.hpp"

using namespace uplab;
using lab::make_row;
using lab::Params;
using lab::ReportRow;
using lab::Verdict;
using hermite::cplx;

namespace {

const double kNone = std::nan("");

struct FunctionFlags {
  int n = 1;
  lab::FunctionSpec spec;
  std::optional<std::uint64_t> seed;

  void attach(CLI::App* app, const std::string& default_variant) {
    spec.variant = default_variant;
    app->add_option("--n", n, "dimension")->check(CLI::Range(1, 8));
    app->add_option("--fn", spec.variant, "function variant")
        ->check(CLI::IsMember(lab::function_variants()))
        ->capture_default_str();
    app->add_option("--index", spec.index, "multi-index for hermite / monomial")->delimiter(',');
    app->add_option("--degree", spec.degree, "maximal degree for seeded variants");
    app->add_option("--k0", spec.k0, "|alpha| mod 4 for ft-eigenfunction");
    app->add_option("--seed", seed, "seed for randomized variants (default 1)");
    app->add_option("--width", spec.width, "gaussian: real quadratic coefficient");
    app->add_option("--chirp", spec.chirp, "gaussian: imaginary quadratic coefficient");
    app->add_option("--t", spec.t, "poisson: semigroup time");
  }

  lab::FunctionSpec resolved() const {
    lab::FunctionSpec s = spec;
    s.seed = seed;
    if (s.randomized() && !s.seed) s.seed = 1;
    return s;
  }
  fmodel::TestFunction build() const { return lab::build_function(resolved(), n); }
  std::string name() const { return lab::describe(resolved()); }
};

// coefficients of f: exact when f is a Hermite expansion, otherwise projected
hermite::HermiteExpansion coefficients_of(const fmodel::TestFunction& f, int max_degree) {
  if (auto e = f.hermite()) return *e;
  auto p = hermite::project([&f](std::span<const double> x) { return f(x); }, f.dim(), max_degree);
  if (!p.converged) std::cerr << "warning: projection did not converge (max change " << p.max_change << ")\n";
  return p.expansion;
}

std::string index_str(const hermite::MultiIndex& a) {
  std::string s;
  for (int i = 0; i < a.dim(); ++i) s += (i ? "," : "") + std::to_string(a[i]);
  return s;
}

void print_coefficients(const std::map<hermite::MultiIndex, cplx>& c) {
  std::printf("# alpha re im abs\n");
  for (const auto& [alpha, v] : c)
    std::printf("%s %s %s %s\n", index_str(alpha).c_str(), lab::format_double(v.real()).c_str(),
                lab::format_double(v.imag()).c_str(), lab::format_double(std::abs(v)).c_str());
}

Verdict converged_verdict(const functional::FunctionalResult& r) {
  return r.converged ? Verdict::Pass : Verdict::Inconclusive;
}

void print_rows(const std::vector<ReportRow>& rows) {
  for (const auto& r : rows)
    std::printf("%-28s %-48s measured=%s reference=%s rel_err=%s %s\n", r.experiment_id.c_str(), r.params.c_str(),
                lab::format_double(r.measured).c_str(), lab::format_double(r.reference).c_str(),
                lab::format_double(r.rel_err).c_str(), lab::to_string(r.verdict).c_str());
}

using Rows = std::vector<ReportRow>;

// One subcommand: options live in the struct, run() appends report rows.
struct Command {
  CLI::App* app = nullptr;
  virtual ~Command() = default;
  virtual void attach(CLI::App& parent) = 0;
  virtual void run(Rows& rows) = 0;
  // true when the command writes its own report files
  virtual bool self_reporting() const { return false; }
};

struct KaEval : Command {
  FunctionFlags ff;
  std::vector<double> as{0.5};
  double reltol = 1e-9;
  void attach(CLI::App& parent) override {
    app = parent.add_subcommand("ka-eval", "K_a(f) = int int |f(x)||f^(y)| e^{a|x.y|}");
    ff.attach(app, "gaussian");
    app->add_option("--a", as, "coupling(s) in [0,1)")->delimiter(',');
    app->add_option("--reltol", reltol);
  }
  void run(Rows& rows) override {
    auto f = ff.build();
    for (double a : as) {
      auto r = functional::ka_eval(f, a, reltol);
      std::printf("K_a = %s  error = %s  converged = %s\n", lab::format_double(r.value).c_str(),
                  lab::format_double(r.error).c_str(), r.converged ? "yes" : "no");
      rows.push_back(make_row("ka-eval", Params().add("f", ff.name()).add("n", ff.n).add("a", a).str(), r.value, kNone,
                              converged_verdict(r)));
    }
  }
};

struct EPoly : Command {
  int j = 0, k = 0;
  std::vector<double> as{0.5};
  void attach(CLI::App& parent) override {
    app = parent.add_subcommand("e-poly", "E(x^j, y^k, a) against twice the closed-form monomial sum (n = 1)");
    app->add_option("--j", j, "exponent of the x monomial")->check(CLI::NonNegativeNumber);
    app->add_option("--k", k, "exponent of the y monomial")->check(CLI::NonNegativeNumber);
    app->add_option("--a", as)->delimiter(',');
  }
  void run(Rows& rows) override {
    for (double a : as) {
      auto r = functional::e_poly_quad(fmodel::Polynomial::monomial({j}), fmodel::Polynomial::monomial({k}), a);
      // the sum covers one sign of xy; e^{a|xy|} needs one copy per sign
      const double sum = functional::e_monomial_bound(j, k, a);
      const double bound = 2 * sum;
      std::printf("E = %s  error = %s  sum = %s  bound = %s\n", lab::format_double(r.value).c_str(),
                  lab::format_double(r.error).c_str(), lab::format_double(sum).c_str(),
                  lab::format_double(bound).c_str());
      Verdict v = !r.converged ? Verdict::Inconclusive : (r.value <= bound ? Verdict::Pass : Verdict::Fail);
      rows.push_back(make_row("e-poly", Params().add("j", j).add("k", k).add("a", a).str(), r.value, bound, v));
    }
  }
};

struct ScalingFitCmd : Command {
  FunctionFlags ff;
  std::vector<double> grid = functional::kDefaultScalingGrid;
  std::vector<int> monomials;
  void attach(CLI::App& parent) override {
    app = parent.add_subcommand("scaling-fit", "slope of log K_a against -log(1-a^2)");
    ff.attach(app, "gaussian");
    app->add_option("--grid", grid)->delimiter(',');
    app->add_option("--monomials", monomials, "j,k: fit E(x^j, y^k, a) instead (n = 1)")->delimiter(',')->expected(2);
  }
  void run(Rows& rows) override {
    functional::ScalingFit fit;
    std::string p;
    if (!monomials.empty()) {
      fit = functional::scaling_fit(fmodel::Polynomial::monomial({monomials[0]}),
                                    fmodel::Polynomial::monomial({monomials[1]}), grid);
      p = Params().add("j", monomials[0]).add("k", monomials[1]).str();
    } else {
      fit = functional::scaling_fit(ff.build(), grid);
      p = Params().add("f", ff.name()).add("n", ff.n).str();
    }
    for (auto [a, v] : fit.samples) std::printf("a = %.10g  value = %s\n", a, lab::format_double(v).c_str());
    std::printf("exponent = %s  residual = %s\n", lab::format_double(fit.exponent).c_str(),
                lab::format_double(fit.residual).c_str());
    rows.push_back(make_row("scaling-fit", p, fit.exponent, kNone, Verdict::Pass));
  }
};

struct WeightedBdj : Command {
  FunctionFlags ff;
  double N = 0.0;
  void attach(CLI::App& parent) override {
    app = parent.add_subcommand("weighted-bdj", "nested-box test of int int |f||f^| e^{|xy|} (1+|x|+|y|)^{-N}");
    ff.attach(app, "gaussian");
    app->add_option("--N", N, "weight power")->check(CLI::NonNegativeNumber);
  }
  void run(Rows& rows) override {
    auto r = functional::weighted_bdj(ff.build(), N);
    const char* outcome = r.divergent ? "divergent" : (r.converged ? "finite" : "inconclusive");
    std::printf("%s  value = %s\n", outcome, lab::format_double(r.value).c_str());
    rows.push_back(make_row("weighted-bdj", Params().add("f", ff.name()).add("N", N).add("outcome", outcome).str(),
                            r.value, kNone, r.inconclusive ? Verdict::Inconclusive : Verdict::Pass));
  }
};

struct ExpMoment : Command {
  FunctionFlags ff;
  std::vector<double> rates{1.0};
  void attach(CLI::App& parent) override {
    app = parent.add_subcommand("exp-moment", "int |f(x)| e^{s|x|} dx");
    ff.attach(app, "gaussian");
    app->add_option("--rate", rates, "exponential rate(s) s")->delimiter(',');
  }
  void run(Rows& rows) override {
    auto f = ff.build();
    for (double s : rates) {
      auto r = functional::exp_moment(f, s);
      std::printf("moment = %s  error = %s\n", lab::format_double(r.value).c_str(), lab::format_double(r.error).c_str());
      rows.push_back(make_row("exp-moment", Params().add("f", ff.name()).add("n", ff.n).add("rate", s).str(), r.value,
                              kNone, converged_verdict(r)));
    }
  }
};

struct HermiteCoeffs : Command {
  FunctionFlags ff;
  int D = 12;
  void attach(CLI::App& parent) override {
    app = parent.add_subcommand("hermite-coeffs", "Hermite coefficients (f, Phi_alpha) by quadrature");
    ff.attach(app, "gaussian");
    app->add_option("--max-degree", D)->check(CLI::NonNegativeNumber);
  }
  void run(Rows& rows) override {
    auto f = ff.build();
    auto p = hermite::project([&f](std::span<const double> x) { return f(x); }, f.dim(), D);
    print_coefficients(p.expansion.coefficients());
    rows.push_back(make_row("hermite-coeffs", Params().add("f", ff.name()).add("D", D).str(), p.max_change, kNone,
                            p.converged ? Verdict::Pass : Verdict::Inconclusive));
  }
};

struct BargmannTaylor : Command {
  FunctionFlags ff;
  int D = 12;
  double radius = 2.0;
  bool bridge = false;
  void attach(CLI::App& parent) override {
    app = parent.add_subcommand("bargmann-taylor", "Taylor coefficients of Bf by contour DFT");
    ff.attach(app, "gaussian");
    app->add_option("--max-degree", D)->check(CLI::NonNegativeNumber);
    app->add_option("--radius", radius)->check(CLI::PositiveNumber);
    app->add_flag("--bridge", bridge, "print Hermite coefficients instead");
  }
  void run(Rows& rows) override {
    auto f = ff.build();
    auto t = bargmann::contour_taylor(bargmann::EntireFunctionHandle::of(f), std::vector<double>(f.dim(), radius), D);
    if (bridge)
      print_coefficients(bargmann::hermite_from_taylor(f.dim(), t.coeffs).coefficients());
    else
      print_coefficients(t.coeffs);
    std::printf("aliasing = %s\n", lab::format_double(t.aliasing).c_str());
    rows.push_back(make_row("bargmann-taylor", Params().add("f", ff.name()).add("D", D).add("radius", radius).str(),
                            t.aliasing, kNone, Verdict::Pass));
  }
};

struct DualityCheck : Command {
  FunctionFlags ff;
  double radius = 2.0, tol = 1e-8;
  int k = 5;
  std::string method = "exact";
  void attach(CLI::App& parent) override {
    app = parent.add_subcommand("duality-check", "max |Bf(-iz) - B(f^)(z)| on a polydisc grid");
    ff.attach(app, "random");
    ff.spec.degree = 8;
    app->add_option("--radius", radius)->check(CLI::PositiveNumber);
    app->add_option("--k", k, "radii and angles per axis")->check(CLI::PositiveNumber);
    app->add_option("--tol", tol);
    app->add_option("--method", method)->check(CLI::IsMember({"exact", "quadrature"}));
  }
  void run(Rows& rows) override {
    auto m = method == "exact" ? bargmann::BargmannMethod::Exact : bargmann::BargmannMethod::Quadrature;
    double dev = bargmann::duality_check(ff.build(), bargmann::polydisc_grid(ff.n, radius, k), m);
    std::printf("max deviation = %s\n", lab::format_double(dev).c_str());
    rows.push_back(make_row("duality-check", Params().add("f", ff.name()).add("n", ff.n).add("method", method).str(), dev,
                            tol, dev < tol));
  }
};

struct ProductBound : Command {
  FunctionFlags ff;
  double a = 0.5, half = 3.0;
  int k = 13;
  void attach(CLI::App& parent) override {
    app = parent.add_subcommand("product-bound", "|Bf Bf^| against the K_a product bound on a lattice");
    ff.attach(app, "hermite");
    app->add_option("--a", a);
    app->add_option("--half-width", half)->check(CLI::PositiveNumber);
    app->add_option("--k", k)->check(CLI::PositiveNumber);
  }
  void run(Rows& rows) override {
    auto rep = bargmann::product_estimate_check(ff.build(), a, bargmann::lattice_grid(ff.n, half, k), std::nullopt, 1e-10);
    std::printf("K_a = %s  max ratio = %s\n", lab::format_double(rep.ka).c_str(), lab::format_double(rep.max_ratio).c_str());
    const double bound = 1.0 + 1e-9;
    Verdict v = !rep.ka_converged ? Verdict::Inconclusive : (rep.max_ratio <= bound ? Verdict::Pass : Verdict::Fail);
    rows.push_back(
        make_row("product-bound", Params().add("f", ff.name()).add("n", ff.n).add("a", a).str(), rep.max_ratio, bound, v));
  }
};

struct EnvelopeCheck : Command {
  FunctionFlags ff;
  std::string kind = "eigenfunction";
  std::optional<double> a, t;
  double c = 1.0;
  int D = 12;
  void attach(CLI::App& parent) override {
    app = parent.add_subcommand("envelope-check", "Hermite-coefficient decay against an envelope");
    ff.attach(app, "ft-eigenfunction");
    ff.spec.degree = 12;
    std::vector<std::string> kinds;
    for (auto k : {envelopes::EnvelopeKind::FtEigenfunction, envelopes::EnvelopeKind::Onfinite,
                   envelopes::EnvelopeKind::ExpDecay, envelopes::EnvelopeKind::Entire,
                   envelopes::EnvelopeKind::VemuriHardy, envelopes::EnvelopeKind::HardyPointwise})
      kinds.push_back(envelopes::to_string(k));
    app->add_option("--kind", kind)->check(CLI::IsMember(kinds))->capture_default_str();
    app->add_option("--a", a);
    app->add_option("--rate", t, "envelope parameter t (alternative to --a)");
    app->add_option("--c", c, "envelope constant");
    app->add_option("--max-degree", D, "projection degree for non-Hermite inputs");
  }
  void run(Rows& rows) override {
    auto f = ff.build();
    envelopes::EnvelopeParams p;
    p.a = a;
    p.t = t;
    p.c = c;
    const auto k = envelopes::envelope_kind_from_string(kind);
    bool ka_ok = true;
    if (k == envelopes::EnvelopeKind::FtEigenfunction) {
      if (!a) throw std::invalid_argument("envelope-check: the eigenfunction envelope needs --a");
      auto ka = functional::ka_eval(f, *a, f.dim() == 1 ? 1e-9 : 1e-2);
      p.ka = ka.value;
      ka_ok = ka.converged;
    }
    auto rep = envelopes::envelope_check(coefficients_of(f, D), envelopes::DecayEnvelope(k, f.dim(), p));
    std::printf("# alpha |c| envelope log_ratio\n");
    for (const auto& r : rep.rows)
      std::printf("%s %s %s %s\n", index_str(r.alpha).c_str(), lab::format_double(r.measured).c_str(),
                  lab::format_double(r.envelope).c_str(), lab::format_double(r.log_ratio).c_str());
    std::printf("slope = %s  max log ratio = %s  %s\n", lab::format_double(rep.slope).c_str(),
                lab::format_double(rep.max_log_ratio).c_str(), rep.dominated ? "dominated" : "not dominated");
    Verdict v = !ka_ok ? Verdict::Inconclusive : (rep.dominated ? Verdict::Pass : Verdict::Fail);
    Params params;
    params.add("f", ff.name()).add("n", ff.n).add("kind", kind);
    if (a) params.add("a", *a);
    if (t) params.add("t", *t);
    rows.push_back(make_row("envelope-check", params.str(), rep.slope, envelopes::kSlopeTolerance, v));
  }
};

struct DecayFitCmd : Command {
  FunctionFlags ff;
  std::string law = envelopes::to_string(envelopes::DecayLaw::SqrtExponential);
  int D = 40;
  void attach(CLI::App& parent) override {
    app = parent.add_subcommand("decay-fit", "fit the Hermite-coefficient decay rate");
    ff.attach(app, "poisson");
    ff.spec.degree = 40;
    ff.spec.t = 0.8;
    app->add_option("--law", law)
        ->check(CLI::IsMember({envelopes::to_string(envelopes::DecayLaw::SqrtExponential),
                               envelopes::to_string(envelopes::DecayLaw::Geometric)}))
        ->capture_default_str();
    app->add_option("--max-degree", D, "projection degree for non-Hermite inputs");
  }
  void run(Rows& rows) override {
    auto fit = envelopes::decay_rate_fit(coefficients_of(ff.build(), D), envelopes::decay_law_from_string(law));
    std::printf("t = %s  intercept = %s  residual = %s  samples = %d\n", lab::format_double(fit.t).c_str(),
                lab::format_double(fit.intercept).c_str(), lab::format_double(fit.residual).c_str(), fit.samples);
    rows.push_back(make_row("decay-fit", Params().add("f", ff.name()).add("law", law).str(), fit.t, kNone, Verdict::Pass));
  }
};

struct PoissonCmd : Command {
  FunctionFlags ff;
  double time = 0.8;
  void attach(CLI::App& parent) override {
    app = parent.add_subcommand("poisson", "apply e^{-s sqrt(H)} to a Hermite expansion");
    ff.attach(app, "random-phase");
    ff.spec.degree = 40;
    app->add_option("--time", time, "semigroup time s")->check(CLI::NonNegativeNumber);
  }
  void run(Rows& rows) override {
    const auto f = ff.build();
    auto e = f.hermite();
    if (!e) throw std::invalid_argument("poisson: input must be a Hermite expansion");
    auto out = heisenberg::poisson_semigroup(*e, time);
    print_coefficients(out.coefficients());
    auto fit = envelopes::decay_rate_fit(out, envelopes::DecayLaw::SqrtExponential);
    std::printf("fitted t = %s\n", lab::format_double(fit.t).c_str());
    rows.push_back(
        make_row("poisson", Params().add("f", ff.name()).add("time", time).str(), fit.t, kNone, Verdict::Pass));
  }
};

struct KAverageCmd : Command {
  FunctionFlags ff;
  double y = 0.3, v = 0.0;
  int K = -1, angles = 64;
  void attach(CLI::App& parent) override {
    app = parent.add_subcommand("kaverage-check", "rotation-averaged norm against the Laguerre sum (n = 1)");
    ff.attach(app, "hermite");
    app->add_option("--y", y);
    app->add_option("--v", v);
    app->add_option("--K", K, "truncation order (default: degree of f)");
    app->add_option("--angles", angles)->check(CLI::PositiveNumber);
  }
  void run(Rows& rows) override {
    const auto f = ff.build();
    auto e = f.hermite();
    if (!e) throw std::invalid_argument("kaverage-check: input must be a Hermite expansion");
    auto rep = heisenberg::kaverage_identity_check(*e, y, v, K >= 0 ? K : e->max_degree(), angles);
    std::printf("lhs = %s  rhs = %s  rel dev = %s\n", lab::format_double(rep.lhs).c_str(),
                lab::format_double(rep.rhs).c_str(), lab::format_double(rep.rel_dev).c_str());
    Verdict verdict = !rep.converged ? Verdict::Inconclusive : (rep.rel_dev < 1e-4 ? Verdict::Pass : Verdict::Fail);
    rows.push_back(
        make_row("kaverage-check", Params().add("f", ff.name()).add("y", y).add("v", v).str(), rep.lhs, rep.rhs, verdict));
  }
};

struct ExperimentCmd : Command {
  std::string key;
  void attach(CLI::App& parent) override {
    app = parent.add_subcommand("experiment", "one acceptance experiment by id or criterion number; no id lists them");
    app->add_option("id", key);
  }
  void run(Rows& rows) override {
    if (key.empty()) {
      for (const auto& e : lab::acceptance_experiments())
        std::printf("%2d  %-28s %s\n", e.criterion, e.id.c_str(), e.title.c_str());
      return;
    }
    rows = lab::find_experiment(key).run();
    lab::sort_rows(rows);
  }
};

struct RunConfig : Command {
  std::string path;
  void attach(CLI::App& parent) override {
    app = parent.add_subcommand("run", "run a JSON experiment config");
    app->add_option("config", path)->required()->check(CLI::ExistingFile);
  }
  void run(Rows& rows) override { lab::run_config(path, &rows); }
  bool self_reporting() const override { return true; }
};

struct RunAll : Command {
  std::string out = "reports";
  void attach(CLI::App& parent) override {
    app = parent.add_subcommand("run-all", "every acceptance experiment; writes run_all.csv and run_all.json");
    app->add_option("--out", out, "output directory")->capture_default_str();
  }
  void run(Rows& rows) override { rows = lab::run_all(out); }
  bool self_reporting() const override { return true; }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"uplab: numerical checks for Beurling-type uncertainty estimates"};
  app.require_subcommand(1);
  std::string csv_path, json_path;
  app.add_option("--csv", csv_path, "also write the report rows as CSV");
  app.add_option("--json", json_path, "also write the report rows as JSON");

  KaEval ka_eval;
  EPoly e_poly;
  ScalingFitCmd scaling;
  WeightedBdj wbdj;
  ExpMoment moment;
  HermiteCoeffs coeffs;
  BargmannTaylor taylor;
  DualityCheck duality;
  ProductBound product;
  EnvelopeCheck envelope;
  DecayFitCmd decay;
  PoissonCmd poisson;
  KAverageCmd kaverage;
  ExperimentCmd experiment;
  RunConfig run;
  RunAll run_all;
  std::vector<Command*> commands{&ka_eval, &e_poly,   &scaling,  &wbdj,       &moment, &coeffs,
                                 &taylor,  &duality,  &product,  &envelope,   &decay,  &poisson,
                                 &kaverage, &experiment, &run, &run_all};
  for (auto* c : commands) c->attach(app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    Rows rows;
    for (auto* c : commands) {
      if (!c->app->parsed()) continue;
      c->run(rows);
      print_rows(rows);
      if (!c->self_reporting() || !csv_path.empty() || !json_path.empty()) lab::emit_report(rows, csv_path, json_path);
    }
    return lab::exit_status(rows);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
