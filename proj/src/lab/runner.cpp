#include "uplab/lab/runner.hpp"

#include <filesystem>

#include "uplab/lab/config.hpp"
#include "uplab/lab/experiments.hpp"

namespace uplab::lab {

int run_config(const std::string& path, std::vector<ReportRow>* rows_out) {
  const ExperimentConfig config = load_config(path);
  std::vector<ReportRow> rows = run_experiment(config);
  sort_rows(rows);
  emit_report(rows, config.csv_path, config.json_path);
  if (rows_out) *rows_out = rows;
  return exit_status(rows);
}

std::vector<ReportRow> run_all(const std::string& out_dir) {
  std::vector<ReportRow> rows;
  for (const auto& e : acceptance_experiments()) {
    auto part = e.run();
    rows.insert(rows.end(), part.begin(), part.end());
  }
  sort_rows(rows);
  std::filesystem::create_directories(out_dir);
  const std::filesystem::path dir(out_dir);
  emit_report(rows, (dir / "run_all.csv").string(), (dir / "run_all.json").string());
  return rows;
}

}  // namespace uplab::lab
