// Allocation-free enumeration kernel for trees of at most 32 vertices.
//
// Decodes codes straight into adjacency bit masks and keys each tree by its
// AHU parenthesis word packed into 64 bits: a rooted subtree is written as
// 1, its child words in descending order, then 0, left-aligned. Balanced
// words are prefix-free, so comparing the left-aligned integers orders them
// lexicographically and equal integers mean equal words. The tree is rooted
// at its center; a bicentral tree keeps the smaller of its two words. The
// key is a complete isomorphism invariant, like canonical_form, but cheaper.
#pragma once

#include <array>
#include <bit>
#include <cstdint>

namespace kabtrees::detail {

inline constexpr int kPackedMaxVertices = 32;

class PackedScanner {
  public:
    PackedScanner(int a, int b) : a_(a), b_(b), n_(a + b), split_(b - 1) { digits_.fill(0); }

    void seek(std::uint64_t rank) {
        for (int i = n_ - 3; i >= 0; --i) {
            const int radix = i < split_ ? a_ : b_;
            digits_[i] = static_cast<std::uint8_t>(rank % radix);
            rank /= radix;
        }
    }

    void advance() {
        for (int i = n_ - 3; i >= 0; --i) {
            const int radix = i < split_ ? a_ : b_;
            if (++digits_[i] < radix) return;
            digits_[i] = 0;
        }
    }

    std::uint64_t key() {
        decode();
        return packed_key();
    }

  private:
    using Mask = std::uint32_t;
    static Mask bit(int v) { return Mask{1} << v; }

    void decode() {
        std::array<std::uint8_t, kPackedMaxVertices> pending;
        for (int v = 0; v < n_; ++v) pending[v] = 1;
        for (int i = 0; i < split_; ++i) ++pending[digits_[i]];
        for (int i = split_; i < n_ - 2; ++i) ++pending[a_ + digits_[i]];
        Mask leaves = 0;
        for (int v = 0; v < n_; ++v) {
            adj_[v] = 0;
            if (pending[v] == 1) leaves |= bit(v);
        }
        int next_a = 0, next_b = split_;
        for (int step = 0; step < n_ - 2; ++step) {
            const int leaf = std::countr_zero(leaves);
            leaves &= leaves - 1;
            const int nb = leaf < a_ ? a_ + digits_[next_b++] : digits_[next_a++];
            adj_[leaf] |= bit(nb);
            adj_[nb] |= bit(leaf);
            if (--pending[nb] == 1) leaves |= bit(nb);
        }
        const int x = std::countr_zero(leaves);
        const int y = std::countr_zero(leaves & (leaves - 1));
        adj_[x] |= bit(y);
        adj_[y] |= bit(x);
    }

    std::uint64_t packed_key() {
        std::array<std::uint8_t, kPackedMaxVertices> degree;
        Mask layer = 0;
        for (int v = 0; v < n_; ++v) {
            degree[v] = static_cast<std::uint8_t>(std::popcount(adj_[v]));
            if (degree[v] <= 1) layer |= bit(v);
        }
        Mask alive = n_ == 32 ? ~Mask{0} : bit(n_) - 1;
        int remaining = n_;
        while (remaining > 2) {
            remaining -= std::popcount(layer);
            alive &= ~layer;
            Mask next = 0;
            for (Mask l = layer; l; l &= l - 1) {
                const int w = std::countr_zero(adj_[std::countr_zero(l)] & alive);
                if (--degree[w] == 1) next |= bit(w);
            }
            layer = next;
        }
        const int c1 = std::countr_zero(layer);
        std::uint64_t best = rooted_word(c1);
        if (std::popcount(layer) == 2) {
            const std::uint64_t other = rooted_word(std::countr_zero(layer & (layer - 1)));
            if (other < best) best = other;
        }
        return best;
    }

    std::uint64_t rooted_word(int root) {
        std::array<std::uint8_t, kPackedMaxVertices> order;
        std::array<std::uint8_t, kPackedMaxVertices> parent;
        int count = 0;
        order[count++] = static_cast<std::uint8_t>(root);
        parent[root] = static_cast<std::uint8_t>(root);
        Mask seen = bit(root);
        for (int i = 0; i < count; ++i) {
            const int v = order[i];
            for (Mask m = adj_[v] & ~seen; m; m &= m - 1) {
                const int w = std::countr_zero(m);
                parent[w] = static_cast<std::uint8_t>(v);
                order[count++] = static_cast<std::uint8_t>(w);
            }
            seen |= adj_[v];
        }
        std::array<std::uint64_t, kPackedMaxVertices> word;
        std::array<std::uint64_t, kPackedMaxVertices> kids;
        for (int i = count - 1; i >= 0; --i) {
            const int v = order[i];
            int k = 0;
            for (Mask m = adj_[v] & ~bit(parent[v]); m; m &= m - 1) {
                const int c = std::countr_zero(m);
                // Insertion sort, descending.
                std::uint64_t w = word[c];
                int j = k++;
                while (j > 0 && kids[j - 1] < w) {
                    kids[j] = kids[j - 1];
                    --j;
                }
                kids[j] = w;
            }
            std::uint64_t out = std::uint64_t{1} << 63;
            int pos = 1;
            for (int j = 0; j < k; ++j) {
                out |= kids[j] >> pos;
                // A balanced word is twice as long as its count of 1 bits.
                pos += 2 * std::popcount(kids[j]);
            }
            word[v] = out;
        }
        return word[root];
    }

    int a_;
    int b_;
    int n_;
    int split_;
    std::array<std::uint8_t, 2 * kPackedMaxVertices> digits_;
    std::array<Mask, kPackedMaxVertices> adj_;
};

}  // namespace kabtrees::detail
