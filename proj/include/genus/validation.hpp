#pragma once

#include <optional>
#include <string>
#include <vector>

namespace genus {

struct ValidationIssue {
  std::string rule;
  std::string message;
};

struct ValidationReport {
  std::vector<ValidationIssue> errors;
  std::vector<ValidationIssue> warnings;
  // delta flag as fixed by the ramification data, when it is determined.
  std::optional<int> resolved_delta;

  bool ok() const { return errors.empty(); }
  void error(std::string rule, std::string message) {
    errors.push_back({std::move(rule), std::move(message)});
  }
  void warn(std::string rule, std::string message) {
    warnings.push_back({std::move(rule), std::move(message)});
  }
};

}  // namespace genus
