#include "cli/report_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace cgauge::cli {

bool SuiteResult::failed() const {
  if (!error.empty() || report.status() == Status::Fail) return true;
  for (const auto& m : members) {
    if (m.failed()) return true;
  }
  return false;
}

std::string format17(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

// Status of a result including its members.
const char* overall_status(const SuiteResult& r) {
  if (r.failed()) return "fail";
  if (r.report.status() == Status::Pass) return "pass";
  for (const auto& m : r.members) {
    if (std::string(overall_status(m)) == "pass") return "pass";
  }
  return to_string(r.report.status());
}

}  // namespace

nlohmann::ordered_json to_json(const SuiteResult& r) {
  nlohmann::ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["suite"] = r.report.suite;
  auto& inputs = j["inputs"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.report.inputs) inputs[k] = v;
  auto& qs = j["quantities"] = nlohmann::ordered_json::object();
  for (const auto& q : r.report.quantities) {
    qs[q.name] = {{"value", format17(q.value)},
                  {"tolerance", format17(q.tolerance)},
                  {"provenance", to_string(q.provenance)}};
  }
  auto& checks = j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : r.report.checks) {
    nlohmann::ordered_json cj = {{"name", c.name},
                                 {"passed", c.passed},
                                 {"status", c.asserted ? (c.passed ? "pass" : "fail") : "reported-only"}};
    if (!c.detail.empty()) cj["detail"] = c.detail;
    checks.push_back(std::move(cj));
  }
  for (const auto& [k, v] : r.extra.items()) j[k] = v;
  if (!r.error.empty()) j["error"] = r.error;
  if (!r.members.empty()) {
    auto& members = j["suites"] = nlohmann::ordered_json::array();
    for (const auto& m : r.members) members.push_back(to_json(m));
  }
  j["status"] = overall_status(r);
  j["wall_time_s"] = r.report.wall_time_s;
  return j;
}

std::string to_csv(const Series& s) {
  std::string out;
  auto line = [&out](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i > 0) out += ',';
      out += cells[i];
    }
    out += '\n';
  };
  line(s.header);
  for (const auto& row : s.rows) line(row);
  return out;
}

void write_outputs(const SuiteResult& r, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  {
    std::ofstream f(dir / "report.json", std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + (dir / "report.json").string());
    f << to_json(r).dump(2) << '\n';
  }
  // The first series found (depth first) becomes series.csv.
  const SuiteResult* with_series = nullptr;
  auto find = [&](auto&& self, const SuiteResult& s) -> void {
    if (with_series) return;
    if (s.series) {
      with_series = &s;
      return;
    }
    for (const auto& m : s.members) self(self, m);
  };
  find(find, r);
  if (with_series) {
    std::ofstream f(dir / "series.csv", std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + (dir / "series.csv").string());
    f << to_csv(*with_series->series);
  }
}

}  // namespace cgauge::cli
