#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace uplab::lab {

enum class Verdict { Pass, Fail, Inconclusive };

std::string to_string(Verdict v);
Verdict verdict_from_string(const std::string& s);

struct ReportRow {
  std::string experiment_id;
  std::string params;  // "key=value;key=value"
  double measured = 0.0;
  double reference = 0.0;  // expected value, or the bound for inequality checks
  double rel_err = 0.0;
  Verdict verdict = Verdict::Inconclusive;

  friend bool operator==(const ReportRow&, const ReportRow&) = default;
};

// |m - r| / max(|r|, 1e-300); 0 when both are the same infinity, NaN when
// the reference is NaN (no numeric reference)
double relative_error(double measured, double reference);

ReportRow make_row(std::string id, std::string params, double measured, double reference, Verdict verdict);
ReportRow make_row(std::string id, std::string params, double measured, double reference, bool pass);

// 17 significant digits, '.' separator; inf, -inf, nan spelled out
std::string format_double(double v);

// sort by experiment id then params (stable)
void sort_rows(std::vector<ReportRow>& rows);

inline constexpr int kReportSchemaVersion = 1;

std::string to_csv(std::vector<ReportRow> rows);
nlohmann::json to_json(std::vector<ReportRow> rows);
std::vector<ReportRow> rows_from_json(const nlohmann::json& doc);

// Writes either path when non-empty; std::runtime_error if a file cannot be written.
void emit_report(const std::vector<ReportRow>& rows, const std::string& csv_path, const std::string& json_path);

// 0 all pass, 2 any fail, 3 inconclusive without fails
int exit_status(const std::vector<ReportRow>& rows);

}  // namespace uplab::lab
