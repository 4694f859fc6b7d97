#pragma once

#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "uplab/lab/config.hpp"
#include "uplab/lab/report.hpp"

namespace uplab::lab {

struct Experiment {
  std::string id;  // e.g. "c03-ka-closed-form"
  int criterion = 0;
  std::string title;
  double budget_seconds = 0.0;
  std::function<std::vector<ReportRow>()> run;
};

// One experiment per acceptance criterion 1..15, in criterion order.
const std::vector<Experiment>& acceptance_experiments();

// by id, or by criterion number given as a string ("7")
const Experiment& find_experiment(const std::string& key);

// Config-driven experiments: ka-eval, scaling-fit, exp-moment, weighted-bdj,
// or any acceptance experiment id.
std::vector<ReportRow> run_experiment(const ExperimentConfig& config);

// "k=v;k=v" with %.10g numbers
class Params {
 public:
  Params& add(const std::string& key, double value);
  Params& add(const std::string& key, const std::string& value);
  std::string str() const { return os_.str(); }

 private:
  std::ostringstream os_;
  bool first_ = true;
};

}  // namespace uplab::lab
