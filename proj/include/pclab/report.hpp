#pragma once

#include <string>
#include <vector>

namespace pclab {

struct Check {
  std::string name;
  bool pass = false;
  /// Empty on success; a concrete counterexample otherwise.
  std::string witness;
};

/// Outcome of a verification run: named checks with witnesses.
struct DualityReport {
  std::string subject;
  std::vector<Check> checks;
  double elapsed_ms = 0.0;

  DualityReport() = default;
  explicit DualityReport(std::string subject) : subject(std::move(subject)) {}

  void add(std::string name, bool pass, std::string witness = {});
  /// Appends other's checks with "prefix/" prepended to their names.
  void merge(const std::string& prefix, const DualityReport& other);
  bool passed() const;
  const Check* find(const std::string& name) const;
  const Check* first_failure() const;
  std::size_t failures() const;
};

}  // namespace pclab
