#pragma once

#include <set>
#include <string>
#include <vector>

#include "z2norm/triangulation.hpp"

namespace z2norm {

struct GridInstance {
    std::string key;     // sortable, e.g. "M/1,2,3" or "lens/3/8/w8"
    std::string family;  // "lens", "balanced_lens", "M", "M'", "P", "Q"
    Triangulation tri;
};

/// Closed instances used by the cross-family checks: M and M' over {1,2,3}^3, P for k = 1..4, Q for k = 4..10,
/// and every fold of every L-graph node to `lensDepth`. Sorted by key.
std::vector<GridInstance> defaultGrid(int lensDepth = 10);

struct CheckResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
    std::vector<std::string> failures;  // capped
    double seconds = 0;
};

/// Names accepted by runAcceptance, in criterion order.
const std::vector<std::string>& acceptanceCheckNames();

/// Runs the selected checks (all when `only` is empty). Unknown names throw DomainError.
std::vector<CheckResult> runAcceptance(const std::set<std::string>& only = {});

}  // namespace z2norm
