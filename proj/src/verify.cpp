#include "kabtrees/verify.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "kabtrees/census.hpp"
#include "kabtrees/codec.hpp"
#include "kabtrees/construct.hpp"
#include "kabtrees/partitions.hpp"

namespace kabtrees {

namespace {

struct Counterexample {
    std::string what;
};

template <typename... Parts>
[[noreturn]] void fail(const Parts&... parts) {
    std::ostringstream out;
    (out << ... << parts);
    throw Counterexample{out.str()};
}

std::string kab(int a, int b) {
    return "K_{" + std::to_string(a) + "," + std::to_string(b) + "}";
}

bool extend_mapping(const std::vector<std::vector<int>>& g, const std::vector<std::vector<int>>& h,
                    const std::vector<int>& order, const std::vector<int>& parent, std::size_t depth,
                    std::vector<int>& image, std::vector<bool>& used) {
    if (depth == order.size()) return true;
    const int v = order[depth];
    auto try_target = [&](int w) {
        if (used[w] || h[w].size() != g[v].size()) return false;
        image[v] = w;
        used[w] = true;
        if (extend_mapping(g, h, order, parent, depth + 1, image, used)) return true;
        used[w] = false;
        return false;
    };
    if (depth == 0) {
        for (int w = 0; w < static_cast<int>(h.size()); ++w)
            if (try_target(w)) return true;
        return false;
    }
    for (int w : h[image[parent[v]]])
        if (try_target(w)) return true;
    return false;
}

BipartiteTree relabel(const BipartiteTree& t, std::mt19937_64& rng, bool swap_sides) {
    std::vector<int> pa(t.a_size()), pb(t.b_size());
    std::iota(pa.begin(), pa.end(), 0);
    std::iota(pb.begin(), pb.end(), 0);
    std::shuffle(pa.begin(), pa.end(), rng);
    std::shuffle(pb.begin(), pb.end(), rng);
    std::vector<Edge> edges;
    for (const Edge& e : t.edges()) {
        if (swap_sides)
            edges.push_back({pb[e.b], pa[e.a]});
        else
            edges.push_back({pa[e.a], pb[e.b]});
    }
    return swap_sides ? BipartiteTree(t.b_size(), t.a_size(), std::move(edges))
                      : BipartiteTree(t.a_size(), t.b_size(), std::move(edges));
}

using Family = std::function<std::string()>;

std::string check_partitions() {
    for (int m = 1; m <= 40; ++m) {
        if (count_partitions(m, 1) != 1) fail("P_1(", m, ") != 1");
        if (count_partitions(m, m + 1) != 0) fail("P_", m + 1, "(", m, ") != 0");
        for (int k = 1; k <= m; ++k) {
            std::size_t emitted = 0;
            for_each_partition(m, k, [&](const DegreePartition& p) {
                ++emitted;
                if (m <= 25 && (p.total() != m || p.length() != k)) fail("bad partition ", p.to_string());
            });
            if (Natural(emitted) != count_partitions(m, k))
                fail("P_", k, "(", m, ") = ", count_partitions(m, k), " but ", emitted, " emitted");
            if (k >= 2) {
                const Natural prev = (m - 1 >= k - 1) ? count_partitions(m - 1, k - 1) : Natural(0);
                const Natural rest = (m - k == 0) ? Natural(0) : count_partitions(m - k, k);
                if (count_partitions(m, k) != prev + rest) fail("recurrence fails at m=", m, " k=", k);
            }
        }
    }
    return "m <= 40";
}

std::string check_codec(int max_n) {
    const int cap = std::min(9, max_n);
    std::uint64_t trees = 0;
    for (int n = 4; n <= cap; ++n) {
        for (int a = 2; 2 * a <= n; ++a) {
            const int b = n - a;
            std::set<BipartiteTree> seen;
            for_each_tree_by_subsets(a, b, [&](const BipartiteTree& t) {
                const BipartiteCode code = encode(t);
                if (decode(code) != t) fail("decode(encode(T)) != T in ", kab(a, b), " for code ", code.to_string());
                const auto adeg = t.a_degrees();
                const auto bdeg = t.b_degrees();
                for (int i = 0; i < a; ++i)
                    if (std::count(code.a_seq().begin(), code.a_seq().end(), i) != adeg[i] - 1)
                        fail("degree law fails for a", i, " in ", code.to_string());
                for (int j = 0; j < b; ++j)
                    if (std::count(code.b_seq().begin(), code.b_seq().end(), j) != bdeg[j] - 1)
                        fail("degree law fails for b", j, " in ", code.to_string());
                ++trees;
            });
            std::uint64_t rank = 0;
            for_each_labeled(a, b, [&](const BipartiteTree& t) {
                const BipartiteCode code = code_at(a, b, rank++);
                if (encode(t) != code) fail("encode(decode(c)) != c in ", kab(a, b), " for ", code.to_string());
                if (!seen.insert(t).second) fail("duplicate tree from ", code.to_string());
            });
            if (Natural(seen.size()) != scoins(a, b)) fail(kab(a, b), ": ", seen.size(), " distinct trees");
        }
    }
    return "a+b <= " + std::to_string(cap) + ", " + std::to_string(trees) + " trees";
}

std::string check_scoins(int max_n) {
    const int cap = std::min(12, max_n);
    for (int n = 4; n <= cap; ++n) {
        for (int a = 2; 2 * a <= n; ++a) {
            const int b = n - a;
            std::uint64_t count = 0;
            for_each_labeled(a, b, [&](const BipartiteTree&) { ++count; });
            const Natural expected = scoins(a, b);
            if (Natural(count) != expected) fail(kab(a, b), ": ", count, " trees, expected ", expected);
            if (kirchhoff_count(a, b) != expected) fail(kab(a, b), ": kirchhoff ", kirchhoff_count(a, b));
        }
    }
    return "a+b <= " + std::to_string(cap);
}

std::string check_construct(int max_n) {
    const int cap = std::min(11, max_n);
    std::uint64_t pairs = 0;
    for (int a = 2; a + 2 <= cap; ++a) {
        for (int b = 2; a + b <= cap; ++b) {
            std::set<CanonicalForm> forms;
            for (const auto& [s, t, tree] : realize_all_pairs(a, b)) {
                BipartiteTree checked(tree.a_size(), tree.b_size(), tree.edges());
                if (tree.a_size() != a || tree.b_size() != b) fail("wrong shape for ", s.to_string(','));
                const auto [ds, dt] = degrees(checked);
                if (ds != s || dt != t)
                    fail("construct(", s.to_string(','), "; ", t.to_string(','), ") has degrees ",
                         ds.to_string(','), "; ", dt.to_string(','));
                const bool fresh = forms.insert(canonical_form(tree)).second;
                if (a < b && !fresh)
                    fail("pairs collide in ", kab(a, b), " at ", s.to_string(','), "; ", t.to_string(','));
                ++pairs;
            }
            if (a <= b && Natural(forms.size()) < lower_bound(a, b))
                fail(kab(a, b), ": only ", forms.size(), " witness classes, lower bound ", lower_bound(a, b));
        }
    }
    return "a+b <= " + std::to_string(cap) + ", " + std::to_string(pairs) + " pairs";
}

std::string check_relabeling(int max_n) {
    const int cap = std::min(12, max_n);
    std::mt19937_64 rng(20240101);
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = 3 + static_cast<int>(rng() % static_cast<unsigned>(cap - 2));
        const int a = 1 + static_cast<int>(rng() % static_cast<unsigned>(n - 1));
        const int b = n - a;
        const BipartiteTree t = sample_uniform(a, b, rng());
        const bool swap_sides = a == b && (rng() & 1);
        const BipartiteTree u = relabel(t, rng, swap_sides);
        if (canonical_form(t) != canonical_form(u))
            fail("relabeling changes fingerprint in ", kab(a, b), ": ", to_json(t), " vs ", to_json(u));
    }
    return "1000 trees, a+b <= " + std::to_string(cap);
}

std::string check_separation(int max_n) {
    const int cap = std::min(10, max_n);
    // Known counts of free trees on n vertices, n = 2..10.
    static constexpr int kFreeTrees[] = {0, 0, 1, 1, 2, 3, 6, 11, 23, 47, 106};
    std::size_t classes = 0;
    for (int n = 2; n <= cap; ++n) {
        std::map<CanonicalForm, std::vector<std::vector<int>>> reps;
        for (int a = 1; 2 * a <= n; ++a) {
            const int b = n - a;
            auto visit = [&](const BipartiteTree& t) {
                auto adj = t.adjacency();
                auto [it, fresh] = reps.try_emplace(canonical_form(adj), adj);
                if (!fresh && !brute_force_isomorphic(it->second, adj))
                    fail("non-isomorphic trees share fingerprint ", it->first.to_hex());
            };
            if (n == 2)
                visit(BipartiteTree(1, 1, {{0, 0}}));
            else
                for_each_labeled(a, b, visit);
        }
        std::vector<const std::vector<std::vector<int>>*> list;
        for (const auto& [form, adj] : reps) list.push_back(&adj);
        for (std::size_t i = 0; i < list.size(); ++i)
            for (std::size_t j = i + 1; j < list.size(); ++j)
                if (brute_force_isomorphic(*list[i], *list[j]))
                    fail("isomorphic trees on ", n, " vertices have different fingerprints");
        if (static_cast<int>(reps.size()) != kFreeTrees[n])
            fail(reps.size(), " classes on ", n, " vertices, expected ", kFreeTrees[n]);
        classes += reps.size();
    }
    return std::to_string(classes) + " free trees on <= " + std::to_string(cap) + " vertices";
}

std::string check_oracles(int max_n) {
    const int cap = std::min(8, max_n);
    for (int n = 4; n <= cap; ++n) {
        for (int a = 2; 2 * a <= n; ++a) {
            const int b = n - a;
            const Natural exact = exact_classes(a, b).count;
            const Natural oracle = oracle_edge_subsets(a, b);
            if (exact != oracle) fail(kab(a, b), ": exact ", exact, " but edge-subset oracle ", oracle);
        }
    }
    return "a+b <= " + std::to_string(cap);
}

std::string check_figures(int max_n) {
    std::vector<std::string> done;
    if (max_n >= 4) {
        if (exact_classes(2, 2).count != 1) fail("I_{2,2} = ", exact_classes(2, 2).count, ", expected 1");
        done.push_back("I_{2,2}=1");
    }
    if (max_n >= 5) {
        if (exact_classes(2, 3).count != 2) fail("I_{2,3} = ", exact_classes(2, 3).count, ", expected 2");
        done.push_back("I_{2,3}=2");
    }
    if (max_n >= 6) {
        if (exact_classes(3, 3).count != 3 || lower_bound(3, 3) != 3) fail("I_{3,3} != 3 = lower");
        done.push_back("I_{3,3}=3=lower");
    }
    std::string out;
    for (const auto& d : done) out += (out.empty() ? "" : " ") + d;
    return out;
}

std::string check_sandwich(int max_n) {
    const int cap = std::min(12, max_n);
    for (const BoundsReport& row : census_table(cap)) {
        if (!row.exact) fail(kab(row.a, row.b), ": exact count unavailable");
        if (!row.sandwich_holds()) fail("bounds violated: ", census_csv_row(row));
        if (row.upper_thm26 && row.lower > *row.upper_thm26) fail("lower > a^(a+b-2): ", census_csv_row(row));
    }
    return "a+b <= " + std::to_string(cap);
}

std::string check_corollaries() {
    for (int a = 2; a <= 30; ++a) {
        for (int b = a; b <= 30; ++b) {
            const auto c = verify_corollaries(a, b);
            if (!c.scoins_dominates_pairs) fail("scoins < P_a P_b at ", kab(a, b));
            if (a == b && !c.diagonal_dominates_unordered.value_or(false)) fail("a^(2a-2) < r(r+1)/2 at a=", a);
        }
    }
    for (int a = 2; a <= 12; ++a)
        for (int b = a + 1; b <= 12; ++b)
            if (!(ipow(a, a + b - 2) < scoins(a, b))) fail("a^(a+b-2) >= scoins at ", kab(a, b));
    return "b <= 30; nontrivial for b <= 12";
}

}  // namespace

bool brute_force_isomorphic(const std::vector<std::vector<int>>& g, const std::vector<std::vector<int>>& h) {
    const std::size_t n = g.size();
    if (h.size() != n) return false;
    if (n == 0) return true;
    std::vector<std::size_t> dg, dh;
    for (const auto& row : g) dg.push_back(row.size());
    for (const auto& row : h) dh.push_back(row.size());
    std::sort(dg.begin(), dg.end());
    std::sort(dh.begin(), dh.end());
    if (dg != dh) return false;

    std::vector<int> order{0}, parent(n, -1);
    std::vector<bool> seen(n, false);
    seen[0] = true;
    for (std::size_t i = 0; i < order.size(); ++i)
        for (int w : g[order[i]])
            if (!seen[w]) {
                seen[w] = true;
                parent[w] = order[i];
                order.push_back(w);
            }
    if (order.size() != n) return false;
    std::vector<int> image(n, -1);
    std::vector<bool> used(n, false);
    return extend_mapping(g, h, order, parent, 0, image, used);
}

std::vector<FamilyResult> run_verification(int max_n, const std::function<void(const FamilyResult&)>& report) {
    if (max_n < 4) throw UsageError("verification needs max_n >= 4");
    const std::vector<std::pair<std::string, Family>> families = {
        {"figures", [&] { return check_figures(max_n); }},
        {"partitions", [] { return check_partitions(); }},
        {"codec-bijection", [&] { return check_codec(max_n); }},
        {"scoins-triangle", [&] { return check_scoins(max_n); }},
        {"construct-fidelity", [&] { return check_construct(max_n); }},
        {"canonical-relabeling", [&] { return check_relabeling(max_n); }},
        {"canonical-separation", [&] { return check_separation(max_n); }},
        {"oracle-agreement", [&] { return check_oracles(max_n); }},
        {"bound-sandwich", [&] { return check_sandwich(max_n); }},
        {"corollaries", [] { return check_corollaries(); }},
    };
    std::vector<FamilyResult> results;
    for (const auto& [name, run] : families) {
        FamilyResult r{name, true, {}};
        try {
            r.detail = run();
        } catch (const Counterexample& c) {
            r.passed = false;
            r.detail = c.what;
        } catch (const std::exception& e) {
            r.passed = false;
            r.detail = std::string("error: ") + e.what();
        }
        if (report) report(r);
        results.push_back(std::move(r));
    }
    return results;
}

}  // namespace kabtrees
