#pragma once

// Reproductions of the worked examples: fixture matrices and a runner that
// reports one pass/fail item per claim.

#include <cstdint>
#include <string>
#include <vector>

#include "symgraph/edge_matrix.hpp"

namespace symgraph {

// E_j in E(6), j = 1, 2, 3: two triangles of vertices joined by the 3 x 3 block C_j.
EdgeMatrix sextic_example(int j);
// E_j in E(5, 18), j = 1, 2: shape (2, 3) with the shared 3 x 3 block B.
EdgeMatrix quintic_example(int j);
// diag(2 D_2, 2 D_2) in E(4, 2).
EdgeMatrix quartic_example();

struct CheckItem {
  std::string group;
  std::string id;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

struct VerifyOptions {
  std::uint64_t seed = 0;
  unsigned threads = 1;
};

// Group names accepted by run_checks, in run order.
const std::vector<std::string>& check_groups();

// Runs one group, or all of them for an empty name. Throws DomainError on an
// unknown group name.
std::vector<CheckItem> run_checks(const std::string& group, const VerifyOptions& opts = {});

}  // namespace symgraph
