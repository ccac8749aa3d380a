#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <vector>

#include "kabtrees/partitions.hpp"

using namespace kabtrees;

namespace {

// Every k-tuple over [1, m] that is non-increasing and sums to m, in
// decreasing lexicographic order.
std::vector<std::vector<int>> brute_force(int m, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> t(k, 1);
    while (true) {
        int sum = 0;
        for (int x : t) sum += x;
        if (sum == m && std::is_sorted(t.rbegin(), t.rend())) out.push_back(t);
        int i = k - 1;
        while (i >= 0 && t[i] == m) t[i--] = 1;
        if (i < 0) break;
        ++t[i];
    }
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

std::vector<std::vector<int>> as_vectors(const std::vector<DegreePartition>& ps) {
    std::vector<std::vector<int>> out;
    for (const auto& p : ps) out.emplace_back(p.parts().begin(), p.parts().end());
    return out;
}

}  // namespace

TEST_CASE("count_partitions examples") {
    CHECK(count_partitions(3, 2) == 1);
    CHECK(count_partitions(5, 3) == 2);
    CHECK(count_partitions(9, 5) == 5);
    for (int m = 1; m <= 30; ++m) CHECK(count_partitions(m, m) == 1);
    CHECK(count_partitions(4, 5) == 0);
}

TEST_CASE("count_partitions rejects non-positive arguments") {
    CHECK_THROWS_AS(count_partitions(0, 1), UsageError);
    CHECK_THROWS_AS(count_partitions(3, 0), UsageError);
    CHECK_THROWS_AS(count_partitions(-2, 1), UsageError);
    CHECK_THROWS_AS(enumerate_partitions(3, 0), UsageError);
}

TEST_CASE("enumerate_partitions examples") {
    using V = std::vector<std::vector<int>>;
    CHECK(as_vectors(enumerate_partitions(3, 2)) == V{{2, 1}});
    CHECK(as_vectors(enumerate_partitions(4, 4)) == V{{1, 1, 1, 1}});
    CHECK(as_vectors(enumerate_partitions(4, 2)) == V{{3, 1}, {2, 2}});
    CHECK(as_vectors(enumerate_partitions(5, 3)) == V{{3, 1, 1}, {2, 2, 1}});
    CHECK(enumerate_partitions(3, 4).empty());
}

TEST_CASE("enumeration matches brute force for small m") {
    for (int m = 1; m <= 7; ++m)
        for (int k = 1; k <= m; ++k) {
            CAPTURE(m);
            CAPTURE(k);
            CHECK(as_vectors(enumerate_partitions(m, k)) == brute_force(m, k));
        }
}

TEST_CASE("count equals stream length and order is strictly decreasing") {
    for (int m = 1; m <= 40; ++m)
        for (int k = 1; k <= m; ++k) {
            std::size_t n = 0;
            std::vector<int> prev;
            bool decreasing = true;
            for_each_partition(m, k, [&](const DegreePartition& p) {
                std::vector<int> cur(p.parts().begin(), p.parts().end());
                if (n > 0 && !(cur < prev)) decreasing = false;
                if (m <= 25) {
                    CHECK(p.total() == m);
                    CHECK(p.length() == k);
                    CHECK(std::is_sorted(cur.rbegin(), cur.rend()));
                    CHECK(cur.back() >= 1);
                }
                prev = std::move(cur);
                ++n;
            });
            CHECK(decreasing);
            CHECK(Natural(n) == count_partitions(m, k));
        }
}

TEST_CASE("two-term recurrence") {
    for (int m = 2; m <= 40; ++m)
        for (int k = 2; k <= m; ++k) {
            const Natural rest = m - k >= k ? count_partitions(m - k, k) : Natural(0);
            CHECK(count_partitions(m, k) == count_partitions(m - 1, k - 1) + rest);
        }
    for (int m = 1; m <= 40; ++m) CHECK(count_partitions(m, 1) == 1);
}

TEST_CASE("count_partitions is exact beyond 64 bits") {
    // P_k(m) = p(m - k) whenever m - k <= k; p(60) and p(500) are the
    // unrestricted partition numbers.
    CHECK(count_partitions(120, 60) == Natural("966467"));
    CHECK(count_partitions(1000, 500) == Natural("2300165032574323995027"));
}

TEST_CASE("DegreePartition invariants") {
    CHECK_THROWS_AS(DegreePartition({1, 2}), NotMonotone);
    CHECK_THROWS_AS(DegreePartition({2, 0}), UsageError);
    CHECK_THROWS_AS(DegreePartition(std::vector<int>{}), UsageError);
    const DegreePartition p({3, 1, 1});
    CHECK(p.total() == 5);
    CHECK(p.length() == 3);
    CHECK(p.to_string() == "3+1+1");
}
