#include "kabtrees/codec.hpp"

#include <bit>
#include <charconv>
#include <limits>
#include <queue>
#include <span>
#include <sstream>

namespace kabtrees {

namespace {

using MinHeap = std::priority_queue<int, std::vector<int>, std::greater<>>;

std::vector<int> parse_list(std::string_view text) {
    std::vector<int> out;
    if (text.empty()) return out;
    std::size_t pos = 0;
    while (true) {
        const std::size_t comma = text.find(',', pos);
        const std::string_view item =
            text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        int value = 0;
        const auto [end, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
        if (ec != std::errc() || end != item.data() + item.size() || item.empty())
            throw UsageError("bad code entry '" + std::string(item) + "'");
        out.push_back(value);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return out;
}

void join(std::ostringstream& out, const std::vector<int>& xs) {
    for (std::size_t i = 0; i < xs.size(); ++i) out << (i ? "," : "") << xs[i];
}

}  // namespace

BipartiteCode::BipartiteCode(int a_size, int b_size, std::vector<int> a_seq, std::vector<int> b_seq)
    : a_size_(a_size), b_size_(b_size), a_seq_(std::move(a_seq)), b_seq_(std::move(b_seq)) {
    if (a_size < 1 || b_size < 1 || a_size + b_size < 3)
        throw DimensionMismatch("codes need a, b >= 1 and a + b >= 3");
    if (static_cast<int>(a_seq_.size()) != b_size - 1 || static_cast<int>(b_seq_.size()) != a_size - 1)
        throw DimensionMismatch("code for K_{" + std::to_string(a_size) + "," + std::to_string(b_size) +
                                "} needs lengths " + std::to_string(b_size - 1) + " and " +
                                std::to_string(a_size - 1));
    for (int x : a_seq_)
        if (x < 0 || x >= a_size) throw CodeOutOfRange("a_seq entry " + std::to_string(x) + " out of range");
    for (int x : b_seq_)
        if (x < 0 || x >= b_size) throw CodeOutOfRange("b_seq entry " + std::to_string(x) + " out of range");
}

std::string BipartiteCode::to_string() const {
    std::ostringstream out;
    join(out, a_seq_);
    out << '|';
    join(out, b_seq_);
    return out.str();
}

BipartiteCode BipartiteCode::parse(int a_size, int b_size, std::string_view text) {
    const std::size_t bar = text.find('|');
    if (bar == std::string_view::npos) throw UsageError("code must look like a_seq|b_seq");
    return BipartiteCode(a_size, b_size, parse_list(text.substr(0, bar)), parse_list(text.substr(bar + 1)));
}

BipartiteCode encode(const BipartiteTree& tree) {
    const int a = tree.a_size(), b = tree.b_size(), n = a + b;
    if (n < 3) throw InvalidTree("encode needs at least 3 vertices");
    const auto adj = tree.adjacency();
    std::vector<int> degree(n);
    std::vector<bool> removed(n, false);
    MinHeap leaves;
    for (int v = 0; v < n; ++v) {
        degree[v] = static_cast<int>(adj[v].size());
        if (degree[v] == 1) leaves.push(v);
    }
    std::vector<int> a_seq, b_seq;
    a_seq.reserve(b - 1);
    b_seq.reserve(a - 1);
    for (int step = 0; step < n - 2; ++step) {
        const int leaf = leaves.top();
        leaves.pop();
        removed[leaf] = true;
        int nb = -1;
        for (int w : adj[leaf])
            if (!removed[w]) nb = w;
        if (nb < a)
            a_seq.push_back(nb);
        else
            b_seq.push_back(nb - a);
        if (--degree[nb] == 1) leaves.push(nb);
    }
    return BipartiteCode(a, b, std::move(a_seq), std::move(b_seq));
}

namespace {

// Smallest pending leaf via a bit mask when the vertex count allows it.
template <typename Leaves>
BipartiteTree decode_with(int a, int b, std::span<const int> a_seq, std::span<const int> b_seq,
                          Leaves& leaves) {
    const int n = a + b;
    std::vector<int> pending(n, 1);
    for (int x : a_seq) ++pending[x];
    for (int x : b_seq) ++pending[a + x];
    for (int v = 0; v < n; ++v)
        if (pending[v] == 1) leaves.push(v);

    std::vector<Edge> edges;
    edges.reserve(n - 1);
    std::size_t next_a = 0, next_b = 0;
    for (int step = 0; step < n - 2; ++step) {
        const int leaf = leaves.pop();
        int nb;
        if (leaf < a) {
            nb = a + b_seq[next_b++];
            edges.push_back({leaf, nb - a});
        } else {
            nb = a_seq[next_a++];
            edges.push_back({nb, leaf - a});
        }
        if (--pending[nb] == 1) leaves.push(nb);
    }
    const int x = leaves.pop();
    const int y = leaves.pop();
    // x < y, so x is the A end.
    edges.push_back({x, y - a});
    return BipartiteTree::trusted(a, b, std::move(edges));
}

struct MaskLeaves {
    std::uint64_t mask = 0;
    void push(int v) { mask |= std::uint64_t{1} << v; }
    int pop() {
        const int v = std::countr_zero(mask);
        mask &= mask - 1;
        return v;
    }
};

struct HeapLeaves {
    MinHeap heap;
    void push(int v) { heap.push(v); }
    int pop() {
        const int v = heap.top();
        heap.pop();
        return v;
    }
};

BipartiteTree decode_raw(int a, int b, std::span<const int> a_seq, std::span<const int> b_seq) {
    if (a + b <= 64) {
        MaskLeaves leaves;
        return decode_with(a, b, a_seq, b_seq, leaves);
    }
    HeapLeaves leaves;
    return decode_with(a, b, a_seq, b_seq, leaves);
}

}  // namespace

BipartiteTree decode(const BipartiteCode& code) {
    return decode_raw(code.a_size(), code.b_size(), code.a_seq(), code.b_seq());
}

Natural code_space_size(int a, int b) {
    if (a < 1 || b < 1) throw UsageError("code space needs a, b >= 1");
    return ipow(a, b - 1) * ipow(b, a - 1);
}

BipartiteCode code_at(int a, int b, std::uint64_t rank) {
    if (Natural(rank) >= code_space_size(a, b)) throw CodeOutOfRange("code rank beyond code space");
    std::vector<int> a_seq(b - 1), b_seq(a - 1);
    for (int i = a - 2; i >= 0; --i) {
        b_seq[i] = static_cast<int>(rank % b);
        rank /= b;
    }
    for (int i = b - 2; i >= 0; --i) {
        a_seq[i] = static_cast<int>(rank % a);
        rank /= a;
    }
    return BipartiteCode(a, b, std::move(a_seq), std::move(b_seq));
}

std::uint64_t code_rank(const BipartiteCode& code) {
    std::uint64_t rank = 0;
    for (int x : code.a_seq()) rank = rank * code.a_size() + x;
    for (int x : code.b_seq()) rank = rank * code.b_size() + x;
    return rank;
}

void for_each_labeled(int a, int b, const std::function<void(const BipartiteTree&)>& visit,
                      std::uint64_t first, std::uint64_t last) {
    if (a < 1 || b < 1 || a + b < 3) throw UsageError("enumerate_labeled needs a, b >= 1 and a + b >= 3");
    const Natural size = code_space_size(a, b);
    if (size <= std::numeric_limits<std::uint64_t>::max() && Natural(last) > size)
        last = static_cast<std::uint64_t>(size);
    if (first >= last) return;

    BipartiteCode start = code_at(a, b, first);
    std::vector<int> digits = start.a_seq();
    digits.insert(digits.end(), start.b_seq().begin(), start.b_seq().end());
    const std::size_t split = static_cast<std::size_t>(b - 1);
    for (std::uint64_t rank = first; rank < last; ++rank) {
        const std::span<const int> all(digits);
        visit(decode_raw(a, b, all.first(split), all.subspan(split)));
        // Odometer step, last digit fastest.
        for (std::size_t i = digits.size(); i-- > 0;) {
            const int radix = i < split ? a : b;
            if (++digits[i] < radix) break;
            digits[i] = 0;
        }
    }
}

std::vector<BipartiteTree> enumerate_labeled(int a, int b) {
    std::vector<BipartiteTree> out;
    for_each_labeled(a, b, [&](const BipartiteTree& t) { out.push_back(t); });
    return out;
}

TreeSampler::TreeSampler(int a, int b, std::uint64_t seed) : a_(a), b_(b), engine_(seed) {
    if (a < 1 || b < 1 || a + b < 3) throw UsageError("sampling needs a, b >= 1 and a + b >= 3");
}

int TreeSampler::draw_below(int bound) {
    const auto r = static_cast<std::uint64_t>(bound);
    // 2^64 mod r, computed without overflow.
    const std::uint64_t excess = (std::numeric_limits<std::uint64_t>::max() % r + 1) % r;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - excess;  // accept x <= limit
    std::uint64_t x;
    do {
        x = engine_();
    } while (x > limit);
    return static_cast<int>(x % r);
}

BipartiteCode TreeSampler::next_code() {
    std::vector<int> a_seq(b_ - 1), b_seq(a_ - 1);
    for (int& x : a_seq) x = draw_below(a_);
    for (int& x : b_seq) x = draw_below(b_);
    return BipartiteCode(a_, b_, std::move(a_seq), std::move(b_seq));
}

BipartiteTree sample_uniform(int a, int b, std::uint64_t seed) { return TreeSampler(a, b, seed).next(); }

}  // namespace kabtrees
