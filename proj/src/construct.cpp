#include "kabtrees/construct.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <string>

namespace kabtrees {

namespace {

// Edges index-aligned with s (A side) and t (B side).
std::vector<Edge> build(const std::vector<int>& s, const std::vector<int>& t) {
    const int a = static_cast<int>(s.size());
    const int b = static_cast<int>(t.size());
    std::vector<Edge> edges;
    if (a == 1) {
        for (int j = 0; j < b; ++j) edges.push_back({0, j});
        return edges;
    }
    if (b == 1) {
        for (int i = 0; i < a; ++i) edges.push_back({i, 0});
        return edges;
    }
    if (b < a) {
        edges = build(t, s);
        for (Edge& e : edges) std::swap(e.a, e.b);
        return edges;
    }
    if (a == 2 && b == 2) return {{0, 0}, {0, 1}, {1, 0}};

    assert(t.back() == 1 && s.front() >= 2);
    std::vector<int> reduced_s = s;
    --reduced_s.front();
    std::sort(reduced_s.begin(), reduced_s.end(), std::greater<>());
    const std::vector<int> reduced_t(t.begin(), t.end() - 1);

    edges = build(reduced_s, reduced_t);
    const int u = static_cast<int>(
        std::find(reduced_s.begin(), reduced_s.end(), s.front() - 1) - reduced_s.begin());
    edges.push_back({u, b - 1});

    // Relabel A so that degrees line up with s again; u now has degree s[0].
    std::vector<int> degree = reduced_s;
    degree[u] = s.front();
    std::vector<int> by_degree(a);
    std::iota(by_degree.begin(), by_degree.end(), 0);
    std::stable_sort(by_degree.begin(), by_degree.end(),
                     [&](int x, int y) { return degree[x] > degree[y]; });
    std::vector<int> relabel(a);
    for (int pos = 0; pos < a; ++pos) relabel[by_degree[pos]] = pos;
    for (Edge& e : edges) e.a = relabel[e.a];
    return edges;
}

}  // namespace

BipartiteTree construct_tree(const DegreePartition& s, const DegreePartition& t) {
    const int a = s.length(), b = t.length();
    if (s.total() != t.total())
        throw SumMismatch("sum mismatch: sum(s) = " + std::to_string(s.total()) +
                          " != sum(t) = " + std::to_string(t.total()));
    if (s.total() != a + b - 1)
        throw SumMismatch("sum mismatch: sum = " + std::to_string(s.total()) +
                          " != a + b - 1 = " + std::to_string(a + b - 1));
    const std::vector<int> sv(s.parts().begin(), s.parts().end());
    const std::vector<int> tv(t.parts().begin(), t.parts().end());
    return BipartiteTree::trusted(a, b, build(sv, tv));
}

BipartiteTree construct_tree(const std::vector<int>& s, const std::vector<int>& t) {
    return construct_tree(DegreePartition(s), DegreePartition(t));
}

std::vector<RealizedPair> realize_all_pairs(int a, int b) {
    if (a < 2 || b < 2) throw UsageError("realize_all_pairs requires a >= 2 and b >= 2");
    const int m = a + b - 1;
    const auto ss = enumerate_partitions(m, a);
    const auto ts = enumerate_partitions(m, b);
    std::vector<RealizedPair> out;
    out.reserve(ss.size() * ts.size());
    for (const auto& s : ss)
        for (const auto& t : ts) out.push_back({s, t, construct_tree(s, t)});
    return out;
}

}  // namespace kabtrees
