#pragma once

#include <cstdint>
#include <map>
#include <optional>

#include "qqr/prime_params.hpp"
#include "qqr/weight_distribution.hpp"

namespace qqr {

/// Subset S of F_p as a bitmask (bit a <=> a in S); defines the curve
/// y^2 = f_S(x) with f_S = prod_{a in S} (x - a). Limited to p <= 63.
struct SubsetS {
    int p = 0;
    std::uint64_t members = 0;

    int size() const;
    SubsetS complement() const;
};

/// Number of affine F_p-points of y^2 = f_S(x), via the quadratic character
/// (chi = 0 gives one y, chi = 1 two, chi = -1 none). Points at infinity are
/// never counted.
int count_affine_points(const PrimeParams& pp, const SubsetS& s);

/// Prop-Joyner cross-check for p == 3 (mod 4): builds c = (r_Q r_S, r_N r_S)
/// and compares wt(c) with 2p - |X_S| (|S| even) or |X_{S^c}| (|S| odd).
bool weight_match_check(const PrimeParams& pp, const SubsetS& s);

/// Histogram B_k = #curves in C_p (even |S|) with exactly k affine points.
struct PointDistribution {
    int p = 0;
    std::map<int, mpz_class> counts;

    mpz_class total() const;
    mpz_class at(int k) const;  // 0 when absent
};

/// Exhausts all 2^{p-1} even subsets in Gray order (each step is one sign-mask
/// XOR); ranges are partitioned across threads with private histograms.
/// Requires p == 3 (mod 4); throws BudgetExceeded when 2^{p-1} > budget.
PointDistribution point_distribution(const PrimeParams& pp,
                                     std::uint64_t budget = std::uint64_t{1} << 26,
                                     unsigned threads = 0);

/// All three clauses of the A_k/B_k interlacing (odd k: A_k = 0; k == 0 mod 4:
/// A_k = B_{2p-k}; k == 2 mod 4: A_k = B_k) plus A_k = B_k + B_{2p-k}.
bool interlace_check(const WeightDistribution& a, const PointDistribution& b);

struct CongruenceReport {
    std::uint64_t checked = 0;
    std::uint64_t violations = 0;
    std::optional<std::uint64_t> first_violation;  // subset mask
};

/// Verifies |X_S| == 2 (mod 4) for even |S| and == 3 (mod 4) for odd |S|.
/// Exhaustive over all 2^p subsets when sample_count is empty (budget-gated),
/// otherwise over seeded uniform samples.
CongruenceReport congruence_scan(const PrimeParams& pp,
                                 std::optional<std::uint64_t> sample_count = std::nullopt,
                                 std::uint64_t seed = 1,
                                 std::uint64_t budget = std::uint64_t{1} << 26);

}  // namespace qqr
