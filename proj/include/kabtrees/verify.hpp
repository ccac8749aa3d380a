#pragma once

#include <functional>
#include <string>
#include <vector>

#include "kabtrees/bigraph.hpp"

namespace kabtrees {

/// Exhaustive isomorphism test for two trees given as neighbour lists.
///
/// Searches vertex bijections that send every edge to an edge, extending
/// along a BFS order of the first tree with degree pruning. Shares no code
/// with canonical_form.
bool brute_force_isomorphic(const std::vector<std::vector<int>>& g, const std::vector<std::vector<int>>& h);

struct FamilyResult {
    std::string family;
    bool passed = true;
    /// Summary on success, first counterexample on failure.
    std::string detail;
};

/// Runs every property family with its natural range capped at max_n
/// vertices (a + b <= max_n). `report` is called once per family as soon as
/// it finishes.
std::vector<FamilyResult> run_verification(int max_n,
                                           const std::function<void(const FamilyResult&)>& report = {});

}  // namespace kabtrees
