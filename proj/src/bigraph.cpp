#include "kabtrees/bigraph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "json.hpp"

namespace kabtrees {

BipartiteTree::BipartiteTree(int a_size, int b_size, std::vector<Edge> edges)
    : a_size_(a_size), b_size_(b_size), edges_(std::move(edges)) {
    if (a_size < 1 || b_size < 1) throw InvalidTree("both sides must be non-empty");
    const int n = a_size + b_size;
    if (static_cast<int>(edges_.size()) != n - 1)
        throw InvalidTree("tree on " + std::to_string(n) + " vertices needs " +
                          std::to_string(n - 1) + " edges, got " + std::to_string(edges_.size()));
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw InvalidTree("duplicate edge");

    std::vector<int> root(n);
    std::iota(root.begin(), root.end(), 0);
    auto find = [&](int v) {
        while (root[v] != v) v = root[v] = root[root[v]];
        return v;
    };
    for (const Edge& e : edges_) {
        if (e.a < 0 || e.a >= a_size || e.b < 0 || e.b >= b_size)
            throw InvalidTree("edge index out of range");
        const int x = find(e.a), y = find(a_size + e.b);
        // n-1 edges without a cycle span all n vertices.
        if (x == y) throw InvalidTree("edges contain a cycle");
        root[x] = y;
    }
}

BipartiteTree BipartiteTree::trusted(int a_size, int b_size, std::vector<Edge> edges) {
    BipartiteTree t;
    t.a_size_ = a_size;
    t.b_size_ = b_size;
    t.edges_ = std::move(edges);
    std::sort(t.edges_.begin(), t.edges_.end());
    return t;
}

std::vector<std::vector<int>> BipartiteTree::adjacency() const {
    std::vector<std::vector<int>> adj(vertex_count());
    for (const Edge& e : edges_) {
        adj[e.a].push_back(a_size_ + e.b);
        adj[a_size_ + e.b].push_back(e.a);
    }
    return adj;
}

std::vector<int> BipartiteTree::a_degrees() const {
    std::vector<int> deg(a_size_, 0);
    for (const Edge& e : edges_) ++deg[e.a];
    return deg;
}

std::vector<int> BipartiteTree::b_degrees() const {
    std::vector<int> deg(b_size_, 0);
    for (const Edge& e : edges_) ++deg[e.b];
    return deg;
}

std::pair<DegreePartition, DegreePartition> degrees(const BipartiteTree& tree) {
    auto sa = tree.a_degrees();
    auto sb = tree.b_degrees();
    std::sort(sa.begin(), sa.end(), std::greater<>());
    std::sort(sb.begin(), sb.end(), std::greater<>());
    return {DegreePartition(std::move(sa)), DegreePartition(std::move(sb))};
}

namespace {

std::vector<int> tree_center(const std::vector<std::vector<int>>& adj) {
    const int n = static_cast<int>(adj.size());
    if (n <= 2) {
        std::vector<int> all(n);
        std::iota(all.begin(), all.end(), 0);
        return all;
    }
    std::vector<int> deg(n);
    std::vector<int> layer;
    for (int v = 0; v < n; ++v) {
        deg[v] = static_cast<int>(adj[v].size());
        if (deg[v] <= 1) layer.push_back(v);
    }
    int remaining = n;
    while (remaining > 2) {
        remaining -= static_cast<int>(layer.size());
        std::vector<int> next;
        for (int leaf : layer) {
            deg[leaf] = 0;
            for (int w : adj[leaf]) {
                if (deg[w] > 0 && --deg[w] == 1) next.push_back(w);
            }
        }
        layer = std::move(next);
    }
    std::sort(layer.begin(), layer.end());
    return layer;
}

std::vector<std::uint32_t> rooted_code(const std::vector<std::vector<int>>& adj, int root) {
    const int n = static_cast<int>(adj.size());
    std::vector<int> parent(n, -1), order;
    order.reserve(n);
    order.push_back(root);
    parent[root] = root;
    for (std::size_t i = 0; i < order.size(); ++i) {
        for (int w : adj[order[i]]) {
            if (parent[w] == -1) {
                parent[w] = order[i];
                order.push_back(w);
            }
        }
    }
    std::vector<std::vector<std::uint32_t>> code(n);
    std::vector<std::vector<int>> children(n);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const int v = *it;
        auto& kids = children[v];
        std::sort(kids.begin(), kids.end(), [&](int x, int y) { return code[x] < code[y]; });
        std::uint32_t size = 1;
        for (int c : kids) size += code[c][0];
        auto& out = code[v];
        out.reserve(size);
        out.push_back(size);
        for (int c : kids) {
            out.insert(out.end(), code[c].begin(), code[c].end());
            std::vector<std::uint32_t>().swap(code[c]);
        }
        if (v != root) children[parent[v]].push_back(v);
    }
    return std::move(code[root]);
}

}  // namespace

CanonicalForm canonical_form(const std::vector<std::vector<int>>& adjacency) {
    const auto center = tree_center(adjacency);
    auto best = rooted_code(adjacency, center.front());
    if (center.size() == 2) best = std::min(best, rooted_code(adjacency, center.back()));
    return CanonicalForm{std::move(best)};
}

CanonicalForm canonical_form(const BipartiteTree& tree) { return canonical_form(tree.adjacency()); }

bool are_isomorphic(const BipartiteTree& t1, const BipartiteTree& t2) {
    if (t1.vertex_count() != t2.vertex_count()) return false;
    return canonical_form(t1) == canonical_form(t2);
}

std::string CanonicalForm::to_hex() const {
    static constexpr char digits[] = "0123456789abcdef";
    std::string out;
    for (std::uint32_t v : code) {
        do {
            std::uint8_t byte = v & 0x7f;
            v >>= 7;
            if (v) byte |= 0x80;
            out.push_back(digits[byte >> 4]);
            out.push_back(digits[byte & 0xf]);
        } while (v);
    }
    return out;
}

std::string to_dot(const BipartiteTree& tree) {
    std::ostringstream out;
    out << "graph T {\n";
    for (int i = 0; i < tree.a_size(); ++i) out << "  a" << i << ";\n";
    for (int j = 0; j < tree.b_size(); ++j) out << "  b" << j << ";\n";
    for (const Edge& e : tree.edges()) out << "  a" << e.a << " -- b" << e.b << ";\n";
    out << "}\n";
    return out.str();
}

std::string to_json(const BipartiteTree& tree) {
    nlohmann::ordered_json j;
    j["a"] = tree.a_size();
    j["b"] = tree.b_size();
    auto edges = nlohmann::ordered_json::array();
    for (const Edge& e : tree.edges()) edges.push_back({e.a, e.b});
    j["edges"] = std::move(edges);
    return j.dump();
}

}  // namespace kabtrees
