// Class scans behind exact_classes, exposed for cross-checking in tests.
#pragma once

#include <cstdint>
#include <vector>

namespace kabtrees::detail {

/// Smallest code rank of every isomorphism class among ranks [0, total),
/// ascending by rank. The packed scan needs a + b <= 32.
std::vector<std::uint64_t> class_ranks_packed(int a, int b, std::uint64_t total, int jobs);
std::vector<std::uint64_t> class_ranks_general(int a, int b, std::uint64_t total, int jobs);

}  // namespace kabtrees::detail
