#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>
#include <set>

#include "kabtrees/census.hpp"
#include "kabtrees/codec.hpp"

using namespace kabtrees;

TEST_CASE("star encodes to its center") {
    const BipartiteTree star(1, 4, {{0, 0}, {0, 1}, {0, 2}, {0, 3}});
    const BipartiteCode code = encode(star);
    CHECK(code.a_seq() == std::vector<int>{0, 0, 0});
    CHECK(code.b_seq().empty());
    CHECK(code.to_string() == "0,0,0|");
    CHECK(decode(code) == star);
}

TEST_CASE("4-path code") {
    // Leaves a1 (neighbour b0), then b0 (neighbour a0); a0-b1 remain.
    const BipartiteTree path(2, 2, {{0, 0}, {0, 1}, {1, 0}});
    const BipartiteCode code = encode(path);
    CHECK(code.a_seq() == std::vector<int>{0});
    CHECK(code.b_seq() == std::vector<int>{0});
    CHECK(code.to_string() == "0|0");
}

TEST_CASE("all-zero code of K_{1,5} is the star") {
    const BipartiteTree t = decode(BipartiteCode(1, 5, {0, 0, 0, 0}, {}));
    CHECK(t == BipartiteTree(1, 5, {{0, 0}, {0, 1}, {0, 2}, {0, 3}, {0, 4}}));
}

TEST_CASE("code validation") {
    CHECK_THROWS_AS(BipartiteCode(2, 3, {0}, {0}), DimensionMismatch);
    CHECK_THROWS_AS(BipartiteCode(2, 3, {0, 2}, {0}), CodeOutOfRange);
    CHECK_THROWS_AS(BipartiteCode(2, 3, {0, 1}, {3}), CodeOutOfRange);
    CHECK_THROWS_AS(BipartiteCode(1, 1, {}, {}), DimensionMismatch);
    CHECK_THROWS_AS(encode(BipartiteTree(1, 1, {{0, 0}})), InvalidTree);
    CHECK(BipartiteCode::parse(2, 3, "0,1|2") == BipartiteCode(2, 3, {0, 1}, {2}));
    CHECK_THROWS_AS(BipartiteCode::parse(2, 3, "0,1;2"), UsageError);
    CHECK_THROWS_AS(BipartiteCode::parse(2, 3, "0,x|2"), UsageError);
}

TEST_CASE("enumerate_labeled sizes and classes") {
    CHECK(enumerate_labeled(2, 2).size() == 4);
    CHECK(enumerate_labeled(2, 3).size() == 12);
    CHECK(enumerate_labeled(3, 3).size() == 81);
    std::set<CanonicalForm> k22, k23;
    for (const auto& t : enumerate_labeled(2, 2)) k22.insert(canonical_form(t));
    for (const auto& t : enumerate_labeled(2, 3)) k23.insert(canonical_form(t));
    CHECK(k22.size() == 1);
    CHECK(k23.size() == 2);
    const auto all = enumerate_labeled(2, 3);
    CHECK(std::set<BipartiteTree>(all.begin(), all.end()).size() == 12);
}

TEST_CASE("encode is injective on K_{2,3}") {
    std::set<BipartiteCode> codes;
    for_each_tree_by_subsets(2, 3, [&](const BipartiteTree& t) { codes.insert(encode(t)); });
    CHECK(codes.size() == 12);
}

TEST_CASE("rank and unrank") {
    CHECK(code_at(2, 3, 0).to_string() == "0,0|0");
    CHECK(code_at(2, 3, 1).to_string() == "0,0|1");
    CHECK(code_at(2, 3, 11).to_string() == "1,1|2");
    CHECK_THROWS_AS(code_at(2, 3, 12), CodeOutOfRange);
    for (std::uint64_t r = 0; r < 432; ++r) CHECK(code_rank(code_at(3, 4, r)) == r);
}

TEST_CASE("shards concatenate to the full enumeration") {
    const auto all = enumerate_labeled(3, 4);
    std::vector<BipartiteTree> pieces;
    const std::uint64_t cuts[] = {0, 100, 101, 300, 432};
    for (int i = 0; i + 1 < 5; ++i)
        for_each_labeled(3, 4, [&](const BipartiteTree& t) { pieces.push_back(t); }, cuts[i], cuts[i + 1]);
    CHECK(pieces == all);
}

TEST_CASE("roundtrips and degree law, exhaustive for a+b <= 9") {
    for (int n = 3; n <= 9; ++n)
        for (int a = 1; a < n; ++a) {
            const int b = n - a;
            std::size_t trees = 0;
            for_each_tree_by_subsets(a, b, [&](const BipartiteTree& t) {
                const BipartiteCode c = encode(t);
                REQUIRE(decode(c) == t);
                const auto da = t.a_degrees(), db = t.b_degrees();
                for (int i = 0; i < a; ++i)
                    REQUIRE(std::count(c.a_seq().begin(), c.a_seq().end(), i) == da[i] - 1);
                for (int j = 0; j < b; ++j)
                    REQUIRE(std::count(c.b_seq().begin(), c.b_seq().end(), j) == db[j] - 1);
                ++trees;
            });
            CHECK(Natural(trees) == scoins(a, b));
            std::uint64_t rank = 0;
            std::set<BipartiteTree> distinct;
            for_each_labeled(a, b, [&](const BipartiteTree& t) {
                REQUIRE(encode(t) == code_at(a, b, rank++));
                distinct.insert(t);
            });
            CHECK(Natural(distinct.size()) == scoins(a, b));
        }
}

TEST_CASE("sampler is reproducible") {
    CHECK(sample_uniform(1, 5, 123) == BipartiteTree(1, 5, {{0, 0}, {0, 1}, {0, 2}, {0, 3}, {0, 4}}));
    CHECK(sample_uniform(2, 2, 99) == sample_uniform(2, 2, 99));
    TreeSampler s1(4, 6, 5), s2(4, 6, 5);
    for (int i = 0; i < 50; ++i) CHECK(s1.next_code() == s2.next_code());
    // First draws, from an independent Python mt19937_64 with the same rejection rule.
    CHECK(TreeSampler(3, 4, 0).next_code().to_string() == "0,2,1|2,0");
    CHECK(TreeSampler(5, 7, 42).next_code().to_string() == "1,4,0,2,1,3|4,0,4,3");
}

TEST_CASE("sampled class frequencies match exhaustive labeled counts on K_{2,3}") {
    // Exhaustion: each of the two classes has 6 labeled trees.
    std::map<CanonicalForm, int> exact;
    for (const auto& t : enumerate_labeled(2, 3)) ++exact[canonical_form(t)];
    REQUIRE(exact.size() == 2);
    for (const auto& [form, count] : exact) CHECK(count == 6);

    TreeSampler sampler(2, 3, 2024);
    std::map<CanonicalForm, int> seen;
    const int draws = 100000;
    for (int i = 0; i < draws; ++i) ++seen[canonical_form(sampler.next())];
    REQUIRE(seen.size() == 2);
    for (const auto& [form, count] : seen) {
        const double expected = draws * exact[form] / 12.0;
        // Binomial sd is ~158; allow 5 sd.
        CHECK(std::abs(count - expected) < 800);
    }
}
