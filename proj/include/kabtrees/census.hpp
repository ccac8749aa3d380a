#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "kabtrees/bigraph.hpp"
#include "kabtrees/common.hpp"

namespace kabtrees {

inline constexpr std::uint64_t kDefaultCodeBudget = 100'000'000;
inline constexpr std::uint64_t kDefaultSubsetBudget = 10'000'000;
inline constexpr int kDefaultKirchhoffLimit = 64;

struct ExactClasses {
    Natural count;
    /// One tree per class: the one with the smallest code. Sorted by canonical form.
    std::vector<BipartiteTree> representatives;
};

/// I_{a,b}: distinct canonical forms over all labeled spanning trees of K_{a,b}.
///
/// The lexicographic code space is cut into `jobs` contiguous shards that are
/// scanned independently and merged by set union, so the result does not
/// depend on `jobs`. Requires 1 <= a <= b; throws BudgetExceeded when
/// a^(b-1) * b^(a-1) > budget.
ExactClasses exact_classes(int a, int b, std::uint64_t budget = kDefaultCodeBudget, int jobs = 1);

/// Class count from every (a+b-1)-edge subset of K_{a,b} that is connected,
/// deduplicated by canonical form. Independent of the code bijection.
/// Throws BudgetExceeded when C(ab, a+b-1) > budget.
Natural oracle_edge_subsets(int a, int b, std::uint64_t budget = kDefaultSubsetBudget);

/// Visits every spanning tree of K_{a,b} found among its (a+b-1)-edge subsets,
/// in lexicographic subset order (edges indexed a-major).
void for_each_tree_by_subsets(int a, int b, const std::function<void(const BipartiteTree&)>& visit);

/// P_a(a+b-1) * P_b(a+b-1) when a < b; r(r+1)/2 with r = P_a(2a-1) when a == b.
Natural lower_bound(int a, int b);

/// a^(a+b-2). Only proven for a < b, so a == b throws DomainError.
Natural upper_bound(int a, int b);

/// I_{a,a} * a^(b-a), for 2 <= a < b.
Natural upper_bound_lemma25(int a, int b, const Natural& exact_iaa);

/// a^(b-1) * b^(a-1).
Natural scoins(int a, int b);

/// Reduced-Laplacian determinant of K_{a,b} by fraction-free elimination.
Natural kirchhoff_count(int a, int b, int size_limit = kDefaultKirchhoffLimit);

/// Exact determinant of a square integer matrix (Bareiss).
Natural bareiss_determinant(std::vector<std::vector<Natural>> m);

struct CorollaryCheck {
    /// a^(b-1) b^(a-1) >= P_a(a+b-1) P_b(a+b-1)
    bool scoins_dominates_pairs = false;
    /// a^(2a-2) >= r(r+1)/2, only evaluated on the diagonal.
    std::optional<bool> diagonal_dominates_unordered = std::nullopt;
};

CorollaryCheck verify_corollaries(int a, int b);

struct BoundsReport {
    int a = 0;
    int b = 0;
    Natural p_a;  ///< P_a(a+b-1)
    Natural p_b;  ///< P_b(a+b-1)
    Natural lower;
    std::optional<Natural> upper_thm26;
    std::optional<Natural> upper_lemma25;
    Natural scoins;
    std::optional<Natural> exact;
    bool corollary_231_holds = false;
    std::optional<bool> corollary_241_holds;

    /// lower <= exact <= every present upper bound and scoins. Vacuous without exact.
    bool sandwich_holds() const;
    std::optional<bool> tight() const;
};

/// One report per 2 <= a <= b with a + b <= max_n, ordered by a + b, then a.
/// Exact counts are left absent when the code space exceeds `budget`.
std::vector<BoundsReport> census_table(int max_n, std::uint64_t budget = kDefaultCodeBudget, int jobs = 1);

/// a,b,P_a,P_b,lower,upper_thm26,upper_lemma25,scoins,exact,tight
std::string census_csv(const std::vector<BoundsReport>& rows);
std::string census_json(const std::vector<BoundsReport>& rows);
std::string census_csv_row(const BoundsReport& row);

}  // namespace kabtrees
