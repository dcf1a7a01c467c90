#include "fanolg/report.hpp"

namespace fanolg {

const char* to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Flagged: return "flagged";
  }
  return "fail";
}

void VerificationReport::add(std::string name, bool ok, std::string details) {
  checks.push_back({std::move(name), ok ? Status::Pass : Status::Fail, std::move(details)});
}

void VerificationReport::flag(std::string name, std::string details) {
  checks.push_back({std::move(name), Status::Flagged, std::move(details)});
}

void VerificationReport::append(const VerificationReport& other, const std::string& prefix) {
  for (const auto& c : other.checks) checks.push_back({prefix + c.name, c.status, c.details});
}

bool VerificationReport::any_fail() const {
  for (const auto& c : checks)
    if (c.status == Status::Fail) return true;
  return false;
}

bool VerificationReport::all_pass() const {
  for (const auto& c : checks)
    if (c.status != Status::Pass) return false;
  return true;
}

const Check* VerificationReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

}  // namespace fanolg
