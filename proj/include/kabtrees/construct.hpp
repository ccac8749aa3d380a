#pragma once

#include <vector>

#include "kabtrees/bigraph.hpp"
#include "kabtrees/partitions.hpp"

namespace kabtrees {

/// Builds a spanning tree of K_{a,b} (a = s.length(), b = t.length()) whose
/// A vertex i has degree s[i] and B vertex j has degree t[j].
///
/// The build follows the leaf-attachment induction: with the B side the
/// weakly larger one, its last part is 1 and the first A part is at least 2,
/// so the tree for (s with s[0]-1, t without its last part) plus a new leaf
/// on the lowest-index A vertex of degree s[0]-1 realizes (s, t). Sides are
/// swapped whenever the B side would become the smaller one. The base case
/// is the path for ((2,1),(2,1)); a single-vertex side forces a star.
///
/// Throws SumMismatch unless sum(s) == sum(t) == a + b - 1.
BipartiteTree construct_tree(const DegreePartition& s, const DegreePartition& t);

/// Same, from raw sequences; throws NotMonotone if either is increasing
/// somewhere, UsageError on a non-positive part.
BipartiteTree construct_tree(const std::vector<int>& s, const std::vector<int>& t);

struct RealizedPair {
    DegreePartition s;
    DegreePartition t;
    BipartiteTree tree;
};

/// construct_tree over every pair in partitions(a+b-1, a) x partitions(a+b-1, b),
/// s-major in enumeration order. Requires a, b >= 2.
std::vector<RealizedPair> realize_all_pairs(int a, int b);

}  // namespace kabtrees
