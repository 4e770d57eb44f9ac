#include "pclab/report.hpp"

#include <algorithm>

namespace pclab {

void DualityReport::add(std::string name, bool pass, std::string witness) {
  checks.push_back(Check{std::move(name), pass, pass ? std::string{} : std::move(witness)});
}

void DualityReport::merge(const std::string& prefix, const DualityReport& other) {
  for (const Check& c : other.checks) checks.push_back(Check{prefix + "/" + c.name, c.pass, c.witness});
  elapsed_ms += other.elapsed_ms;
}

bool DualityReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

const Check* DualityReport::find(const std::string& name) const {
  for (const Check& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

const Check* DualityReport::first_failure() const {
  for (const Check& c : checks)
    if (!c.pass) return &c;
  return nullptr;
}

std::size_t DualityReport::failures() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.pass; }));
}

}  // namespace pclab
