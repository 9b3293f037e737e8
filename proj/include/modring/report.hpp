#ifndef MODRING_REPORT_HPP
#define MODRING_REPORT_HPP

#include <string>
#include <vector>

namespace modring {

/// Outcome of a mathematical check. `failures` lists what did not hold.
struct CheckReport {
  CheckReport() = default;
  explicit CheckReport(std::string check_name) : name(std::move(check_name)) {}

  std::string name;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
  void fail(std::string what) { failures.push_back(std::move(what)); }
  void merge(const CheckReport& other) {
    for (const auto& f : other.failures) failures.push_back(other.name + ": " + f);
  }
};

}  // namespace modring

#endif  // MODRING_REPORT_HPP
