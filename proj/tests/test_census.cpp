#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <set>

#include "kabtrees/census.hpp"
#include "kabtrees/codec.hpp"
#include "kabtrees/partitions.hpp"
#include "../src/census_scan.hpp"
#include "../src/packed_kernel.hpp"

using namespace kabtrees;

TEST_CASE("scoins and kirchhoff agree") {
    CHECK(scoins(2, 2) == 4);
    CHECK(scoins(2, 3) == 12);
    CHECK(scoins(3, 3) == 81);
    CHECK(kirchhoff_count(2, 2) == 4);
    CHECK(kirchhoff_count(2, 3) == 12);
    CHECK(kirchhoff_count(3, 3) == 81);
    for (int a = 1; a <= 8; ++a)
        for (int b = 1; b <= 8; ++b) CHECK(kirchhoff_count(a, b) == scoins(a, b));
    // 20^39 * 30^19 overflows every machine integer.
    CHECK(kirchhoff_count(20, 30) == scoins(20, 30));
    CHECK_THROWS_AS(kirchhoff_count(40, 40, 64), UsageError);
}

TEST_CASE("bareiss determinant") {
    CHECK(bareiss_determinant({{2}}) == 2);
    CHECK(bareiss_determinant({{1, 2}, {3, 4}}) == -2);
    CHECK(bareiss_determinant({{0, 1}, {1, 0}}) == -1);
    CHECK(bareiss_determinant({{1, 2}, {2, 4}}) == 0);
    CHECK(bareiss_determinant({{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}}) == 4);
}

TEST_CASE("lower and upper bounds") {
    CHECK(lower_bound(2, 2) == 1);
    CHECK(lower_bound(2, 3) == 2);
    CHECK(lower_bound(3, 3) == 3);
    CHECK(lower_bound(3, 4) == count_partitions(6, 3) * count_partitions(6, 4));
    CHECK(upper_bound(2, 3) == 8);
    CHECK(upper_bound(2, 4) == 16);
    CHECK(upper_bound(3, 4) == 243);
    CHECK_THROWS_AS(upper_bound(3, 3), DomainError);
    CHECK(upper_bound_lemma25(2, 3, 1) == 2);
    CHECK(upper_bound_lemma25(2, 4, 1) == 4);
    CHECK(upper_bound_lemma25(3, 5, 3) == 27);
    CHECK_THROWS_AS(upper_bound_lemma25(3, 3, 3), UsageError);
}

TEST_CASE("exact class counts") {
    // Labeled size and class count, from an independent networkx enumeration.
    struct Case {
        int a, b, classes;
    };
    for (const Case c : {Case{2, 2, 1}, {2, 3, 2}, {2, 4, 2}, {3, 3, 3}, {2, 5, 3}, {3, 4, 7}, {2, 6, 3},
                         {3, 5, 10}, {4, 4, 9}}) {
        CAPTURE(c.a);
        CAPTURE(c.b);
        const ExactClasses r = exact_classes(c.a, c.b);
        CHECK(r.count == c.classes);
        CHECK(r.representatives.size() == static_cast<std::size_t>(c.classes));
    }
    CHECK(exact_classes(1, 1).count == 1);
    CHECK(exact_classes(1, 6).count == 1);
    CHECK_THROWS_AS(exact_classes(3, 2), UsageError);
}

TEST_CASE("class sizes on small cases") {
    // 4,4 split for K_{2,4} is 8 and 24; K_{3,3} splits 9, 36, 36.
    auto sizes = [](int a, int b) {
        std::map<CanonicalForm, int> seen;
        for (const auto& t : enumerate_labeled(a, b)) ++seen[canonical_form(t)];
        std::multiset<int> out;
        for (const auto& [form, n] : seen) out.insert(n);
        return out;
    };
    CHECK(sizes(2, 3) == std::multiset<int>{6, 6});
    CHECK(sizes(2, 4) == std::multiset<int>{8, 24});
    CHECK(sizes(3, 3) == std::multiset<int>{9, 36, 36});
}

TEST_CASE("representatives carry the smallest code of their class") {
    const ExactClasses r = exact_classes(3, 4);
    std::map<CanonicalForm, std::uint64_t> first;
    std::uint64_t rank = 0;
    for_each_labeled(3, 4, [&](const BipartiteTree& t) { first.try_emplace(canonical_form(t), rank++); });
    REQUIRE(first.size() == r.representatives.size());
    auto it = first.begin();
    for (const auto& rep : r.representatives) {
        CHECK(canonical_form(rep) == it->first);
        CHECK(code_rank(encode(rep)) == it->second);
        ++it;
    }
}

TEST_CASE("packed and general scans agree") {
    for (int n = 3; n <= 10; ++n)
        for (int a = 1; 2 * a <= n; ++a) {
            const int b = n - a;
            const auto total = static_cast<std::uint64_t>(scoins(a, b));
            CAPTURE(a);
            CAPTURE(b);
            CHECK(detail::class_ranks_packed(a, b, total, 1) == detail::class_ranks_general(a, b, total, 1));
        }
}

TEST_CASE("packed key separates exactly like the canonical form") {
    for (int a = 2; a <= 4; ++a) {
        const int b = 8 - a;
        detail::PackedScanner scan(a, b);
        scan.seek(0);
        std::map<std::uint64_t, CanonicalForm> by_key;
        std::map<CanonicalForm, std::uint64_t> by_form;
        const auto total = static_cast<std::uint64_t>(scoins(a, b));
        for (std::uint64_t r = 0; r < total; ++r) {
            const std::uint64_t key = scan.key();
            const CanonicalForm form = canonical_form(decode(code_at(a, b, r)));
            REQUIRE(by_key.try_emplace(key, form).first->second == form);
            REQUIRE(by_form.try_emplace(form, key).first->second == key);
            scan.advance();
        }
    }
}

TEST_CASE("results do not depend on the number of jobs") {
    for (int jobs : {1, 2, 3, 8, 64}) {
        CAPTURE(jobs);
        const ExactClasses r = exact_classes(3, 5, kDefaultCodeBudget, jobs);
        CHECK(r.count == 10);
        CHECK(r.representatives == exact_classes(3, 5).representatives);
        const auto total = static_cast<std::uint64_t>(scoins(2, 5));
        CHECK(detail::class_ranks_general(2, 5, total, jobs) == detail::class_ranks_general(2, 5, total, 1));
    }
    CHECK(census_csv(census_table(8, kDefaultCodeBudget, 1)) == census_csv(census_table(8, kDefaultCodeBudget, 4)));
}

TEST_CASE("budgets") {
    CHECK_THROWS_AS(exact_classes(3, 3, 80), BudgetExceeded);
    CHECK(exact_classes(3, 3, 81).count == 3);
    try {
        exact_classes(4, 4, 10);
    } catch (const BudgetExceeded& e) {
        CHECK(e.required() == 4096);
    }
    CHECK_THROWS_AS(oracle_edge_subsets(4, 5, 1000), BudgetExceeded);
}

TEST_CASE("edge-subset oracle") {
    CHECK(oracle_edge_subsets(2, 2) == 1);
    CHECK(oracle_edge_subsets(2, 4) == 2);
    CHECK(oracle_edge_subsets(3, 3) == 3);
    std::size_t trees = 0;
    for_each_tree_by_subsets(3, 3, [&](const BipartiteTree&) { ++trees; });
    CHECK(trees == 81);
}

TEST_CASE("corollaries") {
    auto c = verify_corollaries(2, 3);
    CHECK(c.scoins_dominates_pairs);
    CHECK_FALSE(c.diagonal_dominates_unordered.has_value());
    c = verify_corollaries(2, 2);
    CHECK(c.scoins_dominates_pairs);
    CHECK(c.diagonal_dominates_unordered == true);
    c = verify_corollaries(5, 5);
    CHECK(c.scoins_dominates_pairs);
    CHECK(c.diagonal_dominates_unordered == true);
}

TEST_CASE("census table and formats") {
    const auto rows = census_table(6);
    REQUIRE(rows.size() == 4);
    CHECK(census_csv(census_table(5)) ==
          "a,b,P_a,P_b,lower,upper_thm26,upper_lemma25,scoins,exact,tight\n"
          "2,2,1,1,1,,,4,1,1\n"
          "2,3,2,1,2,8,2,12,2,1\n");
    CHECK(census_csv_row(rows[2]) == "2,4,2,1,2,16,4,32,2,1");
    CHECK(census_csv_row(rows[3]) == "3,3,2,2,3,,,81,3,1");
    for (const auto& r : rows) CHECK(r.sandwich_holds());

    CHECK(census_json(census_table(5)) ==
          "[\n"
          " {\"a\":2,\"b\":2,\"P_a\":1,\"P_b\":1,\"lower\":1,\"upper_thm26\":null,\"upper_lemma25\":null,"
          "\"scoins\":4,\"exact\":1,\"tight\":true},\n"
          " {\"a\":2,\"b\":3,\"P_a\":2,\"P_b\":1,\"lower\":2,\"upper_thm26\":8,\"upper_lemma25\":2,"
          "\"scoins\":12,\"exact\":2,\"tight\":true}\n"
          "]\n");

    const auto capped = census_table(6, 40);
    CHECK(capped[3].a == 3);
    CHECK_FALSE(capped[3].exact.has_value());
    CHECK_FALSE(capped[3].tight().has_value());
    CHECK(census_csv_row(capped[3]) == "3,3,2,2,3,,,81,,");
    CHECK_THROWS_AS(census_table(3), UsageError);
}

TEST_CASE("exact column up to 10 vertices") {
    // Free trees on n vertices from networkx, grouped by bipartition sizes.
    const std::vector<int> expected = {1, 2, 2, 3, 3, 7, 3, 10, 9, 4, 14, 28, 4, 19, 45, 37};
    std::vector<int> got;
    for (const auto& r : census_table(10)) got.push_back(static_cast<int>(*r.exact));
    CHECK(got == expected);
}
