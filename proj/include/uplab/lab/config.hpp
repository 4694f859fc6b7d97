#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "uplab/lab/function_spec.hpp"

namespace uplab::lab {

// {
//   "experiment": "ka-eval",
//   "dimension": 1,
//   "function": {"variant": "gaussian"},
//   "a_grid": [0.5, 0.9],
//   "t_grid": [],
//   "tolerances": {"reltol": 1e-9},
//   "output": {"csv": "out.csv", "json": "out.json"}
// }
struct ExperimentConfig {
  std::string experiment;
  int dimension = 1;
  FunctionSpec function;
  std::vector<double> a_grid;
  std::vector<double> t_grid;
  std::map<std::string, double> tolerances;
  std::string csv_path;
  std::string json_path;

  double tolerance(const std::string& key, double fallback) const;
  friend bool operator==(const ExperimentConfig&, const ExperimentConfig&) = default;
};

// Unknown keys at any level, a missing experiment id, or a randomized
// function without a seed are rejected with std::invalid_argument.
ExperimentConfig config_from_json(const nlohmann::json& j);
nlohmann::json to_json(const ExperimentConfig& c);
ExperimentConfig load_config(const std::string& path);

}  // namespace uplab::lab
