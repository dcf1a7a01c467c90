#pragma once

#include <string>
#include <vector>

namespace fanolg {

enum class Status { Pass, Fail, Flagged };

const char* to_string(Status s);

struct Check {
  std::string name;
  Status status = Status::Pass;
  std::string details;
};

struct VerificationReport {
  int row = 0;
  std::vector<Check> checks;
  double milliseconds = 0;

  void add(std::string name, bool ok, std::string details = {});
  void flag(std::string name, std::string details);
  void append(const VerificationReport& other, const std::string& prefix = {});
  bool any_fail() const;
  bool all_pass() const;  // no fail and no flag
  const Check* find(const std::string& name) const;
};

}  // namespace fanolg
