#pragma once

#include <string>
#include <utility>
#include <vector>

namespace cgauge {

/// Where a reported number comes from.
enum class Provenance { ClosedForm, Quadrature, EmpiricalEstimate, Exact };

const char* to_string(Provenance p);

struct Quantity {
  std::string name;
  double value = 0.0;
  double tolerance = 0.0;
  Provenance provenance = Provenance::Quadrature;
};

struct Check {
  std::string name;
  bool passed = false;
  /// Reported-only checks never fail a suite.
  bool asserted = true;
  std::string detail;
};

enum class Status { Pass, Fail, ReportedOnly };

const char* to_string(Status s);

struct VerificationReport {
  std::string suite;
  std::vector<std::pair<std::string, std::string>> inputs;
  std::vector<Quantity> quantities;
  std::vector<Check> checks;
  double wall_time_s = 0.0;

  void add_input(std::string key, std::string value) { inputs.emplace_back(std::move(key), std::move(value)); }
  void add_quantity(std::string name, double value, double tolerance, Provenance prov) {
    quantities.push_back({std::move(name), value, tolerance, prov});
  }
  void add_check(std::string name, bool passed, bool asserted = true, std::string detail = {}) {
    checks.push_back({std::move(name), passed, asserted, std::move(detail)});
  }

  /// Fail if an asserted check failed, Pass if any asserted check exists,
  /// ReportedOnly otherwise.
  Status status() const;
  const Quantity* find(const std::string& name) const;
};

}  // namespace cgauge
