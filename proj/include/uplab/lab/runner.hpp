#pragma once

#include <string>
#include <vector>

#include "uplab/lab/report.hpp"

namespace uplab::lab {

// Runs the config, writes its csv/json outputs when set, returns exit_status.
int run_config(const std::string& path, std::vector<ReportRow>* rows_out = nullptr);

// Every acceptance experiment; writes <out_dir>/run_all.csv and run_all.json.
std::vector<ReportRow> run_all(const std::string& out_dir);

}  // namespace uplab::lab
