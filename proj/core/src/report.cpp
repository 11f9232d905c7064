#include "cgauge/report.hpp"

namespace cgauge {

const char* to_string(Provenance p) {
  switch (p) {
    case Provenance::ClosedForm: return "closed-form";
    case Provenance::Quadrature: return "quadrature";
    case Provenance::EmpiricalEstimate: return "empirical upper estimate";
    case Provenance::Exact: return "exact";
  }
  return "unknown";
}

const char* to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::ReportedOnly: return "reported-only";
  }
  return "unknown";
}

Status VerificationReport::status() const {
  bool any_asserted = false;
  for (const auto& c : checks) {
    if (!c.asserted) continue;
    any_asserted = true;
    if (!c.passed) return Status::Fail;
  }
  return any_asserted ? Status::Pass : Status::ReportedOnly;
}

const Quantity* VerificationReport::find(const std::string& name) const {
  for (const auto& q : quantities) {
    if (q.name == name) return &q;
  }
  return nullptr;
}

}  // namespace cgauge
