#include "kabtrees/census.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>
#include <unordered_map>

#include "kabtrees/codec.hpp"
#include "kabtrees/partitions.hpp"
#include "census_scan.hpp"
#include "packed_kernel.hpp"

namespace kabtrees {

namespace {

std::string kab(int a, int b) { return "K_{" + std::to_string(a) + "," + std::to_string(b) + "}"; }

void require_ordered(int a, int b, const char* what) {
    if (a < 2 || b < a) throw UsageError(std::string(what) + " requires 2 <= a <= b");
}

// Smallest code rank seen for each class key.
template <typename Key>
using FirstSeen = std::map<Key, std::uint64_t>;

template <typename Key, typename ScanShard>
FirstSeen<Key> sharded_scan(std::uint64_t total, int jobs, ScanShard scan) {
    const std::uint64_t shards = std::clamp<std::uint64_t>(static_cast<std::uint64_t>(std::max(jobs, 1)), 1, total);
    std::vector<FirstSeen<Key>> partial(shards);
    auto bounds = [&](std::uint64_t s) { return total / shards * s + std::min(s, total % shards); };
    if (shards == 1) {
        partial[0] = scan(0, total);
    } else {
        std::vector<std::jthread> workers;
        workers.reserve(shards);
        for (std::uint64_t s = 0; s < shards; ++s)
            workers.emplace_back([&, s] { partial[s] = scan(bounds(s), bounds(s + 1)); });
    }
    FirstSeen<Key> merged;
    for (auto& part : partial) {
        for (const auto& [key, rank] : part) {
            auto [it, inserted] = merged.try_emplace(key, rank);
            if (!inserted) it->second = std::min(it->second, rank);
        }
    }
    return merged;
}

FirstSeen<std::uint64_t> scan_packed(int a, int b, std::uint64_t first, std::uint64_t last) {
    detail::PackedScanner scanner(a, b);
    scanner.seek(first);
    std::unordered_map<std::uint64_t, std::uint64_t> seen;
    for (std::uint64_t rank = first; rank < last; ++rank) {
        seen.try_emplace(scanner.key(), rank);
        scanner.advance();
    }
    return {seen.begin(), seen.end()};
}

FirstSeen<CanonicalForm> scan_general(int a, int b, std::uint64_t first, std::uint64_t last) {
    FirstSeen<CanonicalForm> seen;
    std::uint64_t rank = first;
    for_each_labeled(
        a, b, [&](const BipartiteTree& t) { seen.try_emplace(canonical_form(t), rank++); }, first, last);
    return seen;
}

Natural binomial(std::uint64_t n, std::uint64_t k) {
    Natural r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

template <typename Key>
std::vector<std::uint64_t> sorted_ranks(const FirstSeen<Key>& seen) {
    std::vector<std::uint64_t> ranks;
    ranks.reserve(seen.size());
    for (const auto& [key, rank] : seen) ranks.push_back(rank);
    std::sort(ranks.begin(), ranks.end());
    return ranks;
}

}  // namespace

namespace detail {

std::vector<std::uint64_t> class_ranks_packed(int a, int b, std::uint64_t total, int jobs) {
    return sorted_ranks(sharded_scan<std::uint64_t>(
        total, jobs, [&](std::uint64_t f, std::uint64_t l) { return scan_packed(a, b, f, l); }));
}

std::vector<std::uint64_t> class_ranks_general(int a, int b, std::uint64_t total, int jobs) {
    return sorted_ranks(sharded_scan<CanonicalForm>(
        total, jobs, [&](std::uint64_t f, std::uint64_t l) { return scan_general(a, b, f, l); }));
}

}  // namespace detail

ExactClasses exact_classes(int a, int b, std::uint64_t budget, int jobs) {
    if (a < 1 || b < a) throw UsageError("exact_classes requires 1 <= a <= b");
    if (a + b == 2) return {1, {BipartiteTree(1, 1, {{0, 0}})}};
    const Natural size = scoins(a, b);
    if (size > budget)
        throw BudgetExceeded("code space of " + kab(a, b) + " has " + size.str() + " codes, budget is " +
                                 std::to_string(budget),
                             size);
    const auto total = static_cast<std::uint64_t>(size);

    const std::vector<std::uint64_t> ranks = a + b <= detail::kPackedMaxVertices
                                                 ? detail::class_ranks_packed(a, b, total, jobs)
                                                 : detail::class_ranks_general(a, b, total, jobs);

    std::vector<std::pair<CanonicalForm, BipartiteTree>> keyed;
    keyed.reserve(ranks.size());
    for (std::uint64_t rank : ranks) {
        BipartiteTree t = decode(code_at(a, b, rank));
        keyed.emplace_back(canonical_form(t), std::move(t));
    }
    std::sort(keyed.begin(), keyed.end());
    ExactClasses out{Natural(keyed.size()), {}};
    for (auto& [form, tree] : keyed) out.representatives.push_back(std::move(tree));
    return out;
}

Natural oracle_edge_subsets(int a, int b, std::uint64_t budget) {
    if (a < 1 || b < a) throw UsageError("oracle_edge_subsets requires 1 <= a <= b");
    const int pick = a + b - 1;
    const Natural subsets = binomial(static_cast<std::uint64_t>(a) * b, pick);
    if (subsets > budget)
        throw BudgetExceeded(kab(a, b) + " has " + subsets.str() + " edge subsets of size " +
                                 std::to_string(pick) + ", budget is " + std::to_string(budget),
                             subsets);

    std::set<CanonicalForm> classes;
    for_each_tree_by_subsets(a, b, [&](const BipartiteTree& t) { classes.insert(canonical_form(t)); });
    return Natural(classes.size());
}

void for_each_tree_by_subsets(int a, int b, const std::function<void(const BipartiteTree&)>& visit) {
    if (a < 1 || b < 1) throw UsageError("for_each_tree_by_subsets requires a, b >= 1");
    const int n = a + b;
    const int edge_count = a * b;
    const int pick = n - 1;
    std::vector<Edge> all;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) all.push_back({i, j});

    std::vector<int> choice(pick);
    std::iota(choice.begin(), choice.end(), 0);
    std::vector<int> root(n);
    while (true) {
        std::iota(root.begin(), root.end(), 0);
        auto find = [&](int v) {
            while (root[v] != v) v = root[v] = root[root[v]];
            return v;
        };
        // n-1 edges without a cycle form a spanning tree.
        bool acyclic = true;
        for (int idx : choice) {
            const int x = find(all[idx].a), y = find(a + all[idx].b);
            if (x == y) {
                acyclic = false;
                break;
            }
            root[x] = y;
        }
        if (acyclic) {
            std::vector<Edge> edges;
            edges.reserve(pick);
            for (int idx : choice) edges.push_back(all[idx]);
            visit(BipartiteTree::trusted(a, b, std::move(edges)));
        }
        int i = pick - 1;
        while (i >= 0 && choice[i] == edge_count - pick + i) --i;
        if (i < 0) break;
        ++choice[i];
        for (int j = i + 1; j < pick; ++j) choice[j] = choice[j - 1] + 1;
    }
}

Natural lower_bound(int a, int b) {
    require_ordered(a, b, "lower_bound");
    if (a < b) return count_partitions(a + b - 1, a) * count_partitions(a + b - 1, b);
    const Natural r = count_partitions(2 * a - 1, a);
    return r * (r + 1) / 2;
}

Natural upper_bound(int a, int b) {
    require_ordered(a, b, "upper_bound");
    if (a == b) throw DomainError("a^(a+b-2) is only an upper bound for a < b; got a = b = " + std::to_string(a));
    return ipow(a, a + b - 2);
}

Natural upper_bound_lemma25(int a, int b, const Natural& exact_iaa) {
    if (a < 2 || b <= a) throw UsageError("upper_bound_lemma25 requires 2 <= a < b");
    return exact_iaa * ipow(a, b - a);
}

Natural scoins(int a, int b) { return code_space_size(a, b); }

Natural bareiss_determinant(std::vector<std::vector<Natural>> m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    Natural sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && m[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(m[k], m[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                // Exact by Sylvester's identity.
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

Natural kirchhoff_count(int a, int b, int size_limit) {
    if (a < 1 || b < 1) throw UsageError("kirchhoff_count requires a, b >= 1");
    const int n = a + b;
    if (n > size_limit)
        throw UsageError("kirchhoff_count: a + b = " + std::to_string(n) + " exceeds limit " +
                         std::to_string(size_limit));
    std::vector<std::vector<Natural>> laplacian(n, std::vector<Natural>(n, 0));
    for (int i = 0; i < a; ++i) {
        laplacian[i][i] = b;
        for (int j = a; j < n; ++j) laplacian[i][j] = laplacian[j][i] = -1;
    }
    for (int j = a; j < n; ++j) laplacian[j][j] = a;
    laplacian.pop_back();
    for (auto& row : laplacian) row.pop_back();
    return bareiss_determinant(std::move(laplacian));
}

CorollaryCheck verify_corollaries(int a, int b) {
    require_ordered(a, b, "verify_corollaries");
    CorollaryCheck out;
    out.scoins_dominates_pairs =
        scoins(a, b) >= count_partitions(a + b - 1, a) * count_partitions(a + b - 1, b);
    if (a == b) {
        const Natural r = count_partitions(2 * a - 1, a);
        out.diagonal_dominates_unordered = ipow(a, 2 * a - 2) >= r * (r + 1) / 2;
    }
    return out;
}

bool BoundsReport::sandwich_holds() const {
    if (!exact) return true;
    if (lower > *exact || *exact > scoins) return false;
    if (upper_thm26 && *exact > *upper_thm26) return false;
    if (upper_lemma25 && *exact > *upper_lemma25) return false;
    return true;
}

std::optional<bool> BoundsReport::tight() const {
    if (!exact) return std::nullopt;
    return *exact == lower;
}

std::vector<BoundsReport> census_table(int max_n, std::uint64_t budget, int jobs) {
    if (max_n < 4) throw UsageError("census_table requires max_n >= 4");
    std::vector<BoundsReport> rows;
    std::map<int, Natural> diagonal;
    for (int n = 4; n <= max_n; ++n) {
        for (int a = 2; 2 * a <= n; ++a) {
            const int b = n - a;
            BoundsReport row;
            row.a = a;
            row.b = b;
            row.p_a = count_partitions(n - 1, a);
            row.p_b = count_partitions(n - 1, b);
            row.lower = lower_bound(a, b);
            row.scoins = scoins(a, b);
            if (row.scoins <= budget) row.exact = exact_classes(a, b, budget, jobs).count;
            if (a < b) {
                row.upper_thm26 = upper_bound(a, b);
                if (auto it = diagonal.find(a); it != diagonal.end())
                    row.upper_lemma25 = upper_bound_lemma25(a, b, it->second);
            } else if (row.exact) {
                diagonal.emplace(a, *row.exact);
            }
            const auto corollaries = verify_corollaries(a, b);
            row.corollary_231_holds = corollaries.scoins_dominates_pairs;
            row.corollary_241_holds = corollaries.diagonal_dominates_unordered;
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

namespace {

std::string cell(const std::optional<Natural>& v) { return v ? v->str() : std::string(); }

std::string json_value(const std::optional<Natural>& v) { return v ? v->str() : std::string("null"); }

}  // namespace

std::string census_csv_row(const BoundsReport& r) {
    std::ostringstream out;
    const auto tight = r.tight();
    out << r.a << ',' << r.b << ',' << r.p_a << ',' << r.p_b << ',' << r.lower << ',' << cell(r.upper_thm26)
        << ',' << cell(r.upper_lemma25) << ',' << r.scoins << ',' << cell(r.exact) << ','
        << (tight ? (*tight ? "1" : "0") : "");
    return out.str();
}

std::string census_csv(const std::vector<BoundsReport>& rows) {
    std::string out = "a,b,P_a,P_b,lower,upper_thm26,upper_lemma25,scoins,exact,tight\n";
    for (const auto& r : rows) out += census_csv_row(r) + '\n';
    return out;
}

std::string census_json(const std::vector<BoundsReport>& rows) {
    // Written by hand so that arbitrarily large counts stay exact JSON numbers.
    std::ostringstream out;
    out << "[";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& r = rows[i];
        const auto tight = r.tight();
        out << (i ? ",\n " : "\n ") << "{\"a\":" << r.a << ",\"b\":" << r.b << ",\"P_a\":" << r.p_a
            << ",\"P_b\":" << r.p_b << ",\"lower\":" << r.lower << ",\"upper_thm26\":" << json_value(r.upper_thm26)
            << ",\"upper_lemma25\":" << json_value(r.upper_lemma25) << ",\"scoins\":" << r.scoins
            << ",\"exact\":" << json_value(r.exact)
            << ",\"tight\":" << (tight ? (*tight ? "true" : "false") : "null") << "}";
    }
    out << (rows.empty() ? "]\n" : "\n]\n");
    return out.str();
}

}  // namespace kabtrees
