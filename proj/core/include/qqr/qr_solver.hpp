#pragma once

#include <map>

#include "qqr/weight_distribution.hpp"

namespace qqr {

/// Rebuilds the full weight distribution of a length-p QR code with minimum
/// distance d from partial counts, using the factorization
/// A(x,y) = (x+y)^d C(x,y) and solving the banded system
/// sum_{i+k=j} binom(d,k) c_i = A_j exactly.
///
/// Knowns are closed under: A_0 = 1 and A_j = 0 for 0 < j < d; A_j = 0 for
/// j == 1, 2 (mod 4); the palindromic symmetry A_j = A_{p-j} (these defaults
/// never override an explicitly supplied value; a symmetry clash throws
/// InconsistentSystem). If the resulting equations do not pin every c_i,
/// InsufficientKnowns lists the indices with no usable count.
///
/// The returned counts are exact nonnegative integers with provenance
/// `reconstructed`; callers wanting the full four-check audit run it on the
/// result (the CLI's reconstruct-qr subcommand does).
WeightDistribution qr_reconstruct(int p, int d, const std::map<int, mpz_class>& known);

}  // namespace qqr
