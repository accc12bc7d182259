#pragma once

#include <cstdint>

#include "qqr/linear_code.hpp"
#include "qqr/weight_distribution.hpp"

namespace qqr {

/// Exact weight distribution by Gray-code traversal of all 2^k messages.
/// The message space is split into contiguous ranges enumerated on `threads`
/// workers (0 = hardware concurrency); each owns a private histogram and the
/// merged result does not depend on the partition.
/// Throws BudgetExceeded when 2^k > budget.
WeightDistribution weight_distribution(const LinearCode& c,
                                       std::uint64_t budget = kDefaultEnumerationBudget,
                                       unsigned threads = 0);

}  // namespace qqr
