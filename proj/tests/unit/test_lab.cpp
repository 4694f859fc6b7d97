#include <catch_amalgamated.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "uplab/core/numeric.hpp"
#include "uplab/lab/config.hpp"
#include "uplab/lab/experiments.hpp"
#include "uplab/lab/report.hpp"
#include "uplab/lab/runner.hpp"

using namespace uplab;
using namespace uplab::lab;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream is(p, std::ios::binary);
  std::ostringstream os;
  os << is.rdbuf();
  return os.str();
}

fs::path scratch_dir(const std::string& name) {
  fs::path d = fs::temp_directory_path() / ("uplab_test_" + name);
  fs::remove_all(d);
  fs::create_directories(d);
  return d;
}

}  // namespace

TEST_CASE("17-digit formatting") {
  CHECK(format_double(2 * kPi) == "6.2831853071795862");
  CHECK(format_double(0.1) == "0.10000000000000001");
  CHECK(format_double(kInf) == "inf");
  CHECK(format_double(-kInf) == "-inf");
  CHECK(format_double(std::nan("")) == "nan");
  CHECK(std::stod(format_double(1.0 / 3.0)) == 1.0 / 3.0);
}

TEST_CASE("relative error") {
  CHECK(relative_error(1.1, 1.0) == Catch::Approx(0.1));
  CHECK(relative_error(1e-310, 0.0) == Catch::Approx(1e-10));
  CHECK(relative_error(kInf, kInf) == 0.0);
  CHECK(std::isnan(relative_error(1.0, std::nan(""))));
  CHECK(make_row("x", "", 2.0, 1.0, false).verdict == Verdict::Fail);
  CHECK(make_row("x", "", 2.0, 1.0, true).rel_err == 1.0);
}

TEST_CASE("CSV emission") {
  CHECK(to_csv({}) == "experiment_id,params,measured,reference,rel_err,verdict\r\n");
  std::vector<ReportRow> rows{make_row("b", "k=1", 1.0, 1.0, true), make_row("a", "x=\"q\",y", 2.0, 1.0, false)};
  const std::string csv = to_csv(rows);
  // sorted, quoted per RFC 4180
  CHECK(csv.find("a,\"x=\"\"q\"\",y\",2,1,1,fail\r\n") != std::string::npos);
  CHECK(csv.find("a,") < csv.find("b,"));
}

TEST_CASE("JSON round trip preserves every row") {
  std::vector<ReportRow> rows{make_row("c", "a=0.5", 2 * kPi, 6.0, Verdict::Inconclusive),
                              make_row("d", "", kInf, kInf, true), make_row("e", "n=2", 1.0, std::nan(""), true)};
  auto doc = to_json(rows);
  CHECK(doc["schema_version"] == kReportSchemaVersion);
  auto back = rows_from_json(nlohmann::json::parse(doc.dump()));
  REQUIRE(back.size() == rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(back[i].experiment_id == rows[i].experiment_id);
    CHECK(back[i].params == rows[i].params);
    CHECK(back[i].verdict == rows[i].verdict);
    CHECK(format_double(back[i].measured) == format_double(rows[i].measured));
    CHECK(format_double(back[i].reference) == format_double(rows[i].reference));
  }
  CHECK(back[0].measured == 2 * kPi);
}

TEST_CASE("exit status") {
  CHECK(exit_status({}) == 0);
  CHECK(exit_status({make_row("a", "", 1, 1, true)}) == 0);
  CHECK(exit_status({make_row("a", "", 1, 1, true), make_row("b", "", 1, 1, Verdict::Inconclusive)}) == 3);
  CHECK(exit_status({make_row("a", "", 1, 1, false), make_row("b", "", 1, 1, Verdict::Inconclusive)}) == 2);
}

TEST_CASE("emit_report refuses unwritable paths") {
  CHECK_THROWS_AS(emit_report({}, "/nonexistent-dir/x.csv", ""), std::runtime_error);
}

TEST_CASE("config round trip and validation") {
  auto j = nlohmann::json::parse(R"({
    "experiment": "ka-eval", "dimension": 1,
    "function": {"variant": "random", "degree": 4, "seed": 11},
    "a_grid": [0.3, 0.5], "tolerances": {"reltol": 1e-9},
    "output": {"csv": "x.csv", "json": "x.json"}})");
  auto c = config_from_json(j);
  CHECK(c.function.seed == 11u);
  CHECK(c.tolerance("reltol", 0) == 1e-9);
  CHECK(c.tolerance("missing", 7.0) == 7.0);
  CHECK(config_from_json(to_json(c)) == c);

  auto bad = j;
  bad["extra"] = 1;
  CHECK_THROWS_AS(config_from_json(bad), std::invalid_argument);
  bad = j;
  bad["function"]["colour"] = "red";
  CHECK_THROWS_AS(config_from_json(bad), std::invalid_argument);
  bad = j;
  bad["output"]["xml"] = "x";
  CHECK_THROWS_AS(config_from_json(bad), std::invalid_argument);
  bad = j;
  bad["function"].erase("seed");
  CHECK_THROWS_AS(config_from_json(bad), std::invalid_argument);
  bad = j;
  bad.erase("experiment");
  CHECK_THROWS_AS(config_from_json(bad), std::invalid_argument);
}

TEST_CASE("function specs") {
  FunctionSpec s;
  s.variant = "monomial";
  s.index = {2};
  auto f = build_function(s, 1);
  double x = 1.5;
  CHECK(std::abs(f(std::span<const double>(&x, 1)) - 2.25 * std::exp(-1.125)) < 1e-14);
  CHECK(describe(s) == "monomial(2)");
  CHECK(function_spec_from_json(to_json(s)) == s);
  s.index = {1, 1};
  CHECK_THROWS_AS(build_function(s, 1), std::invalid_argument);
  FunctionSpec g;
  CHECK(build_function(g, 2).hermite() != nullptr);
}

TEST_CASE("Params formatting") {
  CHECK(Params().add("a", 0.5).add("f", "gaussian").add("n", 2).str() == "a=0.5;f=gaussian;n=2");
  CHECK(Params().add("d", 1.0 / 3.0).str() == "d=0.3333333333");
}

TEST_CASE("experiment registry") {
  const auto& list = acceptance_experiments();
  REQUIRE(list.size() == 15u);
  for (std::size_t i = 0; i < list.size(); ++i) CHECK(list[i].criterion == static_cast<int>(i) + 1);
  CHECK(find_experiment("7").id == "c07-coefficient-paths");
  CHECK(find_experiment("c14-laguerre-growth").criterion == 14);
  CHECK_THROWS(find_experiment("99"));
}

TEST_CASE("run_config writes byte-identical reports on repeat runs") {
  auto dir = scratch_dir("run_config");
  const fs::path cfg = dir / "cfg.json";
  {
    std::ofstream os(cfg);
    os << R"({
      // comments are allowed
      "experiment": "ka-eval", "dimension": 1,
      "function": {"variant": "random", "degree": 3, "seed": 5},
      "a_grid": [0.5, 0.2],
      "output": {"csv": ")" << (dir / "a.csv").string() << R"(", "json": ")" << (dir / "a.json").string() << R"("}})";
  }
  std::vector<ReportRow> rows;
  CHECK(run_config(cfg.string(), &rows) == 0);
  REQUIRE(rows.size() == 2u);
  CHECK(rows[0].params < rows[1].params);
  const std::string csv1 = slurp(dir / "a.csv"), json1 = slurp(dir / "a.json");
  CHECK(run_config(cfg.string()) == 0);
  CHECK(slurp(dir / "a.csv") == csv1);
  CHECK(slurp(dir / "a.json") == json1);
  CHECK(to_csv(rows_from_json(nlohmann::json::parse(json1))) == csv1);
}

TEST_CASE("parametric experiments") {
  ExperimentConfig c;
  c.experiment = "exp-moment";
  c.t_grid = {1.0};
  auto rows = run_experiment(c);
  REQUIRE(rows.size() == 1u);
  CHECK(rows[0].measured == Catch::Approx(6.95410362340739).epsilon(1e-10));
  c.experiment = "weighted-bdj";
  c.tolerances["N"] = 2.0;
  CHECK(run_experiment(c)[0].params.find("outcome=finite") != std::string::npos);
  c.experiment = "nope";
  CHECK_THROWS_AS(run_experiment(c), std::invalid_argument);
  CHECK_THROWS_AS(load_config("/nonexistent/config.json"), std::exception);
}
