#include "rahman/report.hpp"

#include <algorithm>

namespace rahman {

bool Report::check(bool ok, const std::string& description) {
  ++checked_;
  if (!ok && !first_failure_) first_failure_ = description;
  return ok;
}

void Report::fail(std::string description) {
  if (!first_failure_) first_failure_ = std::move(description);
}

bool all_passed(const std::vector<Report>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const Report& r) { return r.passed(); });
}

}  // namespace rahman
