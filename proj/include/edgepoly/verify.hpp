#pragma once

#include <string>
#include <vector>

namespace edgepoly {

struct ClaimResult {
  std::string id;
  std::string description;
  std::string expected;
  std::string actual;
  bool passed = false;
};

/// Re-derives every headline value: small-d maximality of K_d, closed
/// forms, the d = 14 tie set, the d = 15 and d = 20 constructions, the
/// triangle upper bound, and the complement-bipartite expectation. Failures
/// are reported, never thrown.
std::vector<ClaimResult> verify_claims();

}  // namespace edgepoly
