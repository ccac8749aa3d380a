#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "kabtrees/bigraph.hpp"
#include "kabtrees/common.hpp"

namespace kabtrees {

/// Code of a labeled spanning tree of K_{a,b}: a_seq in A^(b-1), b_seq in B^(a-1).
///
/// Codes are ordered lexicographically on a_seq followed by b_seq; this is
/// the order enumerate_labeled walks and the order code indices count in.
class BipartiteCode {
  public:
    /// Throws DimensionMismatch on wrong lengths and CodeOutOfRange on an
    /// entry outside its side.
    BipartiteCode(int a_size, int b_size, std::vector<int> a_seq, std::vector<int> b_seq);

    int a_size() const noexcept { return a_size_; }
    int b_size() const noexcept { return b_size_; }
    const std::vector<int>& a_seq() const noexcept { return a_seq_; }
    const std::vector<int>& b_seq() const noexcept { return b_seq_; }

    /// "a_seq|b_seq" with comma separated entries, e.g. "0,1|2".
    std::string to_string() const;
    static BipartiteCode parse(int a_size, int b_size, std::string_view text);

    friend bool operator==(const BipartiteCode&, const BipartiteCode&) = default;
    friend auto operator<=>(const BipartiteCode&, const BipartiteCode&) = default;

  private:
    int a_size_ = 0;
    int b_size_ = 0;
    std::vector<int> a_seq_;
    std::vector<int> b_seq_;
};

/// Vertex order is A0 < ... < A(a-1) < B0 < ... < B(b-1). The smallest leaf
/// is deleted until two vertices remain; each deleted leaf's neighbour is
/// appended to a_seq (neighbour in A) or b_seq (neighbour in B).
/// Throws InvalidTree when a + b < 3.
BipartiteCode encode(const BipartiteTree& tree);

/// Inverse of encode.
BipartiteTree decode(const BipartiteCode& code);

/// a^(b-1) * b^(a-1), the number of codes and of labeled spanning trees.
Natural code_space_size(int a, int b);

/// The code with the given lexicographic rank; rank < code_space_size(a, b).
BipartiteCode code_at(int a, int b, std::uint64_t rank);

/// Lexicographic rank of a code.
std::uint64_t code_rank(const BipartiteCode& code);

/// Decodes every code with rank in [first, last) in lexicographic order.
/// `last` is clamped to the code space size.
void for_each_labeled(int a, int b, const std::function<void(const BipartiteTree&)>& visit,
                      std::uint64_t first = 0, std::uint64_t last = UINT64_MAX);

/// All labeled spanning trees of K_{a,b} in code order. Requires a + b >= 3.
std::vector<BipartiteTree> enumerate_labeled(int a, int b);

/// Reproducible uniform sampler over labeled spanning trees of K_{a,b}.
///
/// Uses std::mt19937_64 seeded with `seed` (the engine's output sequence is
/// fixed by the C++ standard). Each code entry, a_seq first, is drawn from
/// [0, r) by rejection: a 64-bit word x is accepted when
/// x < 2^64 - (2^64 mod r) and mapped to x mod r.
class TreeSampler {
  public:
    TreeSampler(int a, int b, std::uint64_t seed);

    BipartiteCode next_code();
    BipartiteTree next() { return decode(next_code()); }

  private:
    int draw_below(int bound);

    int a_;
    int b_;
    std::mt19937_64 engine_;
};

/// First draw of TreeSampler(a, b, seed).
BipartiteTree sample_uniform(int a, int b, std::uint64_t seed);

}  // namespace kabtrees
