#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace rahman {

/// Outcome of one verifier: how many exact identities were checked and the
/// first one that failed, if any. Passing is defined as "no failure".
class Report {
 public:
  explicit Report(std::string name) : name_(std::move(name)) {}

  /// Counts one identity; records it as the first failure if `ok` is false
  /// and nothing failed before. Returns `ok`.
  bool check(bool ok, const std::string& description = {});
  template <class Describe>
  bool check_lazy(bool ok, Describe&& describe) {
    ++checked_;
    if (!ok && !first_failure_) first_failure_ = describe();
    return ok;
  }
  void fail(std::string description);
  void set_note(std::string note) { note_ = std::move(note); }

  const std::string& name() const { return name_; }
  bool passed() const { return !first_failure_.has_value(); }
  std::size_t checked() const { return checked_; }
  const std::optional<std::string>& first_failure() const { return first_failure_; }
  const std::optional<std::string>& note() const { return note_; }

 private:
  std::string name_;
  std::size_t checked_ = 0;
  std::optional<std::string> first_failure_;
  std::optional<std::string> note_;
};

bool all_passed(const std::vector<Report>& reports);

}  // namespace rahman
