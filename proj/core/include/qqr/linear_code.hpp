#pragma once

#include <cstdint>

#include "qqr/bitvec.hpp"

namespace qqr {

/// Default cap on 2^k for exhaustive codeword enumeration.
inline constexpr std::uint64_t kDefaultEnumerationBudget = std::uint64_t{1} << 26;

/// Binary [n, k] linear code in canonical form: the stored generator is the
/// unique RREF basis of the row space, so two LinearCode objects describe the
/// same code iff they compare equal.
class LinearCode {
   public:
    LinearCode() = default;

    /// Builds the code spanned by the rows of `generators` (need not be
    /// independent; zero rows are dropped).
    explicit LinearCode(const BitMatrix& generators);

    std::size_t n() const { return n_; }
    std::size_t k() const { return generator_.rows(); }

    const BitMatrix& generator() const { return generator_; }
    /// (n-k) x n parity-check matrix; generator * parity_check^T = 0.
    const BitMatrix& parity_check() const { return parity_check_; }

    /// Membership via syndrome; throws LengthMismatch if length(w) != n.
    bool contains(const BitVector& w) const;

    bool operator==(const LinearCode&) const = default;

   private:
    std::size_t n_ = 0;
    BitMatrix generator_;
    BitMatrix parity_check_;
};

/// Dual code; dual(dual(c)) == c.
LinearCode dual(const LinearCode& c);

/// Subcode of even-weight words; dimension k or k-1.
LinearCode even_subcode(const LinearCode& c);

/// Block-diagonal direct sum, left positions first.
LinearCode direct_sum(const LinearCode& a, const LinearCode& b);

/// Exhaustive minimum distance over all 2^k codewords.
/// Throws BudgetExceeded when 2^k > budget.
std::size_t min_distance_brute(const LinearCode& c,
                               std::uint64_t budget = kDefaultEnumerationBudget);

}  // namespace qqr
