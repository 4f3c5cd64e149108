#pragma once

#include <string>
#include <vector>

#include "qsym/scd.hpp"

namespace qsym {

struct CheckResult {
  std::string name;
  bool passed = true;
  std::vector<std::string> violations;
};

/// Outcome of the six checks: cover, saturation, rank symmetry,
/// restriction, extension, pattern.
struct CertifyReport {
  std::vector<CheckResult> checks;

  bool all_passed() const;
  const CheckResult& check(const std::string& name) const;
  std::string to_text() const;
};

/// Checks a decomposition of L(w,h) independently of how it was built. Edge
/// labels are recomputed from the partitions.
CertifyReport certify(const ChainDecomposition& d);

/// Edge labels of the form (prefix without 1s, p, p, ..., p) where p is a
/// permutation of 1..w.
bool matches_pattern(const std::vector<int>& labels, int w);

}  // namespace qsym
