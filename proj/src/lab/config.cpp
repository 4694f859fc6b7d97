#include "uplab/lab/config.hpp"

#include <fstream>
#include <set>
#include <stdexcept>

namespace uplab::lab {

double ExperimentConfig::tolerance(const std::string& key, double fallback) const {
  auto it = tolerances.find(key);
  return it == tolerances.end() ? fallback : it->second;
}

namespace {

void reject_unknown(const nlohmann::json& j, const std::set<std::string>& known, const std::string& where) {
  if (!j.is_object()) throw std::invalid_argument(where + ": expected an object");
  for (const auto& [key, value] : j.items())
    if (!known.count(key)) throw std::invalid_argument(where + ": unknown field '" + key + "'");
}

}  // namespace

ExperimentConfig config_from_json(const nlohmann::json& j) {
  reject_unknown(j, {"experiment", "dimension", "function", "a_grid", "t_grid", "tolerances", "output"}, "config");
  ExperimentConfig c;
  if (!j.contains("experiment")) throw std::invalid_argument("config: missing 'experiment'");
  try {
    c.experiment = j.at("experiment").get<std::string>();
    if (j.contains("dimension")) c.dimension = j["dimension"].get<int>();
    if (j.contains("function")) c.function = function_spec_from_json(j["function"]);
    if (j.contains("a_grid")) c.a_grid = j["a_grid"].get<std::vector<double>>();
    if (j.contains("t_grid")) c.t_grid = j["t_grid"].get<std::vector<double>>();
    if (j.contains("tolerances")) {
      if (!j["tolerances"].is_object()) throw std::invalid_argument("config: tolerances must be an object");
      for (const auto& [key, value] : j["tolerances"].items()) c.tolerances[key] = value.get<double>();
    }
    if (j.contains("output")) {
      reject_unknown(j["output"], {"csv", "json"}, "config.output");
      if (j["output"].contains("csv")) c.csv_path = j["output"]["csv"].get<std::string>();
      if (j["output"].contains("json")) c.json_path = j["output"]["json"].get<std::string>();
    }
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("config: ") + e.what());
  }
  if (c.dimension < 1) throw std::invalid_argument("config: dimension must be >= 1");
  if (c.function.randomized() && !c.function.seed)
    throw std::invalid_argument("config: randomized function variant '" + c.function.variant + "' needs a seed");
  return c;
}

nlohmann::json to_json(const ExperimentConfig& c) {
  nlohmann::json j{{"experiment", c.experiment},
                   {"dimension", c.dimension},
                   {"function", to_json(c.function)},
                   {"a_grid", c.a_grid},
                   {"t_grid", c.t_grid},
                   {"tolerances", nlohmann::json::object()}};
  for (const auto& [k, v] : c.tolerances) j["tolerances"][k] = v;
  nlohmann::json out = nlohmann::json::object();
  if (!c.csv_path.empty()) out["csv"] = c.csv_path;
  if (!c.json_path.empty()) out["json"] = c.json_path;
  j["output"] = out;
  return j;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::invalid_argument("cannot read config " + path);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(is, nullptr, true, true);  // comments allowed
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument("config " + path + ": " + e.what());
  }
  return config_from_json(j);
}

}  // namespace uplab::lab
