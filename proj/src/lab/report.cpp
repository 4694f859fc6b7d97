#include "uplab/lab/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace uplab::lab {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

Verdict verdict_from_string(const std::string& s) {
  if (s == "pass") return Verdict::Pass;
  if (s == "fail") return Verdict::Fail;
  if (s == "inconclusive") return Verdict::Inconclusive;
  throw std::invalid_argument("unknown verdict: " + s);
}

double relative_error(double measured, double reference) {
  if (std::isnan(reference) || std::isnan(measured)) return std::nan("");
  if (measured == reference) return 0.0;
  return std::abs(measured - reference) / std::max(std::abs(reference), 1e-300);
}

ReportRow make_row(std::string id, std::string params, double measured, double reference, Verdict verdict) {
  return {std::move(id), std::move(params), measured, reference, relative_error(measured, reference), verdict};
}

ReportRow make_row(std::string id, std::string params, double measured, double reference, bool pass) {
  return make_row(std::move(id), std::move(params), measured, reference, pass ? Verdict::Pass : Verdict::Fail);
}

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void sort_rows(std::vector<ReportRow>& rows) {
  std::stable_sort(rows.begin(), rows.end(), [](const ReportRow& a, const ReportRow& b) {
    if (a.experiment_id != b.experiment_id) return a.experiment_id < b.experiment_id;
    return a.params < b.params;
  });
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

nlohmann::json number(double v) {
  if (std::isfinite(v)) return v;
  return format_double(v);
}

double read_number(const nlohmann::json& j) {
  if (j.is_number()) return j.get<double>();
  const std::string s = j.get<std::string>();
  if (s == "nan") return std::nan("");
  if (s == "inf") return INFINITY;
  if (s == "-inf") return -INFINITY;
  throw std::invalid_argument("report: bad number " + s);
}

}  // namespace

std::string to_csv(std::vector<ReportRow> rows) {
  sort_rows(rows);
  std::string out = "experiment_id,params,measured,reference,rel_err,verdict\r\n";
  for (const auto& r : rows) {
    out += csv_field(r.experiment_id) + ',' + csv_field(r.params) + ',' + format_double(r.measured) + ',' +
           format_double(r.reference) + ',' + format_double(r.rel_err) + ',' + to_string(r.verdict) + "\r\n";
  }
  return out;
}

nlohmann::json to_json(std::vector<ReportRow> rows) {
  sort_rows(rows);
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : rows)
    arr.push_back({{"experiment_id", r.experiment_id},
                   {"params", r.params},
                   {"measured", number(r.measured)},
                   {"reference", number(r.reference)},
                   {"rel_err", number(r.rel_err)},
                   {"verdict", to_string(r.verdict)}});
  return {{"schema_version", kReportSchemaVersion}, {"rows", arr}};
}

std::vector<ReportRow> rows_from_json(const nlohmann::json& doc) {
  if (doc.at("schema_version").get<int>() != kReportSchemaVersion)
    throw std::invalid_argument("report: unsupported schema version");
  std::vector<ReportRow> rows;
  for (const auto& j : doc.at("rows"))
    rows.push_back({j.at("experiment_id").get<std::string>(), j.at("params").get<std::string>(),
                    read_number(j.at("measured")), read_number(j.at("reference")), read_number(j.at("rel_err")),
                    verdict_from_string(j.at("verdict").get<std::string>())});
  return rows;
}

void emit_report(const std::vector<ReportRow>& rows, const std::string& csv_path, const std::string& json_path) {
  auto write = [](const std::string& path, const std::string& text) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot write " + path);
    os << text;
    if (!os) throw std::runtime_error("write failed: " + path);
  };
  if (!csv_path.empty()) write(csv_path, to_csv(rows));
  if (!json_path.empty()) write(json_path, to_json(rows).dump(2) + "\n");
}

int exit_status(const std::vector<ReportRow>& rows) {
  bool inconclusive = false;
  for (const auto& r : rows) {
    if (r.verdict == Verdict::Fail) return 2;
    if (r.verdict == Verdict::Inconclusive) inconclusive = true;
  }
  return inconclusive ? 3 : 0;
}

}  // namespace uplab::lab
