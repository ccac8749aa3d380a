#include "kabtrees/partitions.hpp"

#include <numeric>
#include <sstream>

namespace kabtrees {

DegreePartition::DegreePartition(std::vector<int> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw UsageError("partition must have at least one part");
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) throw UsageError("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw NotMonotone("partition must be non-increasing: " + to_string(','));
    }
    total_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::string DegreePartition::to_string(char sep) const {
    std::ostringstream out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out << sep;
        out << parts_[i];
    }
    return out.str();
}

Natural count_partitions(int m, int k) {
    if (m < 1 || k < 1) throw UsageError("count_partitions requires m >= 1 and k >= 1");
    if (k > m) return 0;
    // table[i][j] = P_j(i); P_j(i) = P_{j-1}(i-1) + P_j(i-j), P_0(0) = 1.
    std::vector<std::vector<Natural>> table(m + 1, std::vector<Natural>(k + 1, 0));
    table[0][0] = 1;
    for (int i = 1; i <= m; ++i) {
        for (int j = 1; j <= std::min(i, k); ++j) {
            table[i][j] = table[i - 1][j - 1] + table[i - j][j];
        }
    }
    return table[m][k];
}

namespace {

void extend(std::vector<int>& prefix, int remaining, int slots, int cap,
            const std::function<void(const DegreePartition&)>& visit) {
    if (slots == 0) {
        if (remaining == 0) visit(DegreePartition(prefix));
        return;
    }
    // Every later slot needs at least 1, and none may exceed this part.
    const int hi = std::min(cap, remaining - (slots - 1));
    const int lo = (remaining + slots - 1) / slots;
    for (int part = hi; part >= lo; --part) {
        prefix.push_back(part);
        extend(prefix, remaining - part, slots - 1, part, visit);
        prefix.pop_back();
    }
}

}  // namespace

void for_each_partition(int m, int k, const std::function<void(const DegreePartition&)>& visit) {
    if (m < 1 || k < 1) throw UsageError("enumerate_partitions requires m >= 1 and k >= 1");
    if (k > m) return;
    std::vector<int> prefix;
    prefix.reserve(k);
    extend(prefix, m, k, m, visit);
}

std::vector<DegreePartition> enumerate_partitions(int m, int k) {
    std::vector<DegreePartition> out;
    for_each_partition(m, k, [&](const DegreePartition& p) { out.push_back(p); });
    return out;
}

}  // namespace kabtrees
