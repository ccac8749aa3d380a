#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "kabtrees/partitions.hpp"

namespace kabtrees {

/// An edge between A-vertex `a` and B-vertex `b`.
struct Edge {
    int a = 0;
    int b = 0;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// A labeled spanning tree of K_{a,b}.
///
/// Vertices are A0..A(a-1) and B0..B(b-1). Edges are kept sorted so two
/// trees compare equal exactly when they have the same labeled edge set.
class BipartiteTree {
  public:
    /// Validates edge count, index ranges, duplicates and connectivity;
    /// throws InvalidTree on any violation.
    BipartiteTree(int a_size, int b_size, std::vector<Edge> edges);

    /// Skips validation. The caller guarantees a spanning tree.
    static BipartiteTree trusted(int a_size, int b_size, std::vector<Edge> edges);

    int a_size() const noexcept { return a_size_; }
    int b_size() const noexcept { return b_size_; }
    int vertex_count() const noexcept { return a_size_ + b_size_; }
    const std::vector<Edge>& edges() const noexcept { return edges_; }

    /// Neighbour lists over global ids: A vertex i is i, B vertex j is a_size + j.
    std::vector<std::vector<int>> adjacency() const;

    /// Per-vertex degrees in index order (not sorted).
    std::vector<int> a_degrees() const;
    std::vector<int> b_degrees() const;

    friend bool operator==(const BipartiteTree&, const BipartiteTree&) = default;
    friend auto operator<=>(const BipartiteTree& l, const BipartiteTree& r) {
        if (auto c = l.a_size_ <=> r.a_size_; c != 0) return c;
        if (auto c = l.b_size_ <=> r.b_size_; c != 0) return c;
        return l.edges_ <=> r.edges_;
    }

  private:
    BipartiteTree() = default;

    int a_size_ = 0;
    int b_size_ = 0;
    std::vector<Edge> edges_;
};

/// Sorted (non-increasing) degree partitions of the A side and the B side.
std::pair<DegreePartition, DegreePartition> degrees(const BipartiteTree& tree);

/// Isomorphism-class fingerprint of an abstract (uncoloured) tree.
///
/// Encoding: the tree is rooted at its center. Each rooted subtree is
/// written as its vertex count followed by the encodings of its child
/// subtrees in ascending lexicographic order, so every subtree is length
/// prefixed. A bicentral tree is encoded from both center vertices and the
/// lexicographically smaller sequence is kept. The first entry is always
/// the vertex count of the whole tree.
struct CanonicalForm {
    std::vector<std::uint32_t> code;

    /// Each entry as unsigned LEB128, bytes rendered as lowercase hex.
    /// Trees below 128 vertices therefore use two hex digits per vertex.
    std::string to_hex() const;

    friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
    friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

CanonicalForm canonical_form(const BipartiteTree& tree);

/// Canonical form of an arbitrary tree given as neighbour lists.
CanonicalForm canonical_form(const std::vector<std::vector<int>>& adjacency);

bool are_isomorphic(const BipartiteTree& t1, const BipartiteTree& t2);

/// Graphviz rendering, nodes a0.. and b0.., edges in sorted order.
std::string to_dot(const BipartiteTree& tree);

/// {"a":..,"b":..,"edges":[[ai,bj],...]}
std::string to_json(const BipartiteTree& tree);

}  // namespace kabtrees
