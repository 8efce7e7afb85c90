#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "detspace/detkit.hpp"

namespace detspace {

struct VerdictReport {
  std::string theorem_id;
  std::string instance;  // human-readable instance description
  bool passed = false;
  // named computed quantities, in emission order
  std::vector<std::pair<std::string, std::string>> numbers;
  std::vector<std::string> witnesses;
  std::vector<std::string> caveats;
  // on failure, the violated clause
  std::string violated;
};

struct GroupAnalysis {
  unsigned centralizer_dim = 0;
  u64 centralizer_order = 0;
  bool field_flag = false;  // commuting algebra is a field
  std::optional<u64> normalizer_order;
  std::optional<u64> quotient_order;
  bool skipped = false;  // normalizer scan over budget
};

// Solve {C : C M_i = M_i C for all i} exactly, then count invertible
// solutions by enumeration; flags when the commuting algebra is a field.
GroupAnalysis centralizer(const MatSubspace& sub, const Config& cfg);

// Brute-force normalizer scan over GL(n,q) when |GL| fits the group budget;
// otherwise returns with skipped = true.
GroupAnalysis normalizer_quotient(const MatSubspace& sub, const Config& cfg);

// ids accepted by verify(), in catalogue order
const std::vector<std::string>& theorem_ids();

// Check one catalogue entry against an instance. Arithmetic-only entries
// (relatively_prime) ignore the subspace and accept null. Unknown ids are
// errors.
VerdictReport verify(const std::string& theorem_id, const MatSubspace* sub,
                     const Config& cfg);

struct SuiteResult {
  std::vector<VerdictReport> reports;
  bool all_passed = true;
};

// Run every catalogue entry on its designated instances.
SuiteResult verify_suite(const Config& cfg);

}  // namespace detspace
