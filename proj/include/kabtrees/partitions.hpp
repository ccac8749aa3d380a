#pragma once

#include <compare>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "kabtrees/common.hpp"

namespace kabtrees {

/// A partition of `total()` into exactly `length()` positive, non-increasing parts.
///
/// The constructor validates the invariants and throws NotMonotone for an
/// increasing step and UsageError for a non-positive part or empty input.
class DegreePartition {
  public:
    explicit DegreePartition(std::vector<int> parts);

    std::span<const int> parts() const noexcept { return parts_; }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    int total() const noexcept { return total_; }
    int operator[](std::size_t i) const { return parts_[i]; }

    /// "2+1" style rendering used by the CLI listing.
    std::string to_string(char sep = '+') const;

    friend bool operator==(const DegreePartition&, const DegreePartition&) = default;
    friend auto operator<=>(const DegreePartition& l, const DegreePartition& r) {
        return l.parts_ <=> r.parts_;
    }

  private:
    std::vector<int> parts_;
    int total_ = 0;
};

/// P_k(m): the number of partitions of m into exactly k positive parts.
/// Zero when k > m. Throws UsageError if m < 1 or k < 1.
Natural count_partitions(int m, int k);

/// Calls `visit` for every partition of m into k parts, in strictly
/// decreasing lexicographic order. Emits nothing when k > m.
void for_each_partition(int m, int k, const std::function<void(const DegreePartition&)>& visit);

std::vector<DegreePartition> enumerate_partitions(int m, int k);

}  // namespace kabtrees
