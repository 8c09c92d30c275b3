#pragma once

#include <string>
#include <vector>

namespace catcomp {

/// One violated law, with a replayable witness in `detail`.
struct Violation {
  std::string law;    // e.g. "identity-left", "assoc", "CM1", "Siml2"
  std::string detail; // names the offending morphisms/elements

  friend bool operator==(const Violation&, const Violation&) = default;
};

/// Result of a validator: empty means every law holds.
class ValidationReport {
public:
  void add(std::string law, std::string detail) {
    violations_.push_back({std::move(law), std::move(detail)});
  }

  bool ok() const { return violations_.empty(); }
  const std::vector<Violation>& violations() const { return violations_; }

  void merge(const ValidationReport& other) {
    violations_.insert(violations_.end(), other.violations_.begin(),
                       other.violations_.end());
  }

private:
  std::vector<Violation> violations_;
};

} // namespace catcomp
