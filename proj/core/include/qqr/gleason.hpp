#pragma once

#include <map>

#include "qqr/hompoly.hpp"
#include "qqr/weight_distribution.hpp"

namespace qqr {

/// Expansion of an even self-dual enumerator of degree D in the Gleason basis:
/// sum over 2i + 8j = D of a_i G^i J^j. Exponents i with a_i != 0 satisfy
/// i == D/2 (mod 4).
struct GleasonDecomposition {
    std::size_t degree = 0;
    std::map<int, mpq_class> coeffs;  // i -> a_i, every i with 2i + 8j = D listed
};

/// Greedy peeling: a_i is read off the x^{D-2j} y^{2j} coefficient of the
/// running residual, largest i first; the final residual must vanish exactly
/// or NotInGleasonRing is thrown.
GleasonDecomposition gleason_decompose(const HomPoly& a);

/// Rebuilds sum a_i G^i J^j; exact inverse of gleason_decompose.
HomPoly gleason_expand(const GleasonDecomposition& d);

/// Recovers the full QQR weight distribution for p == 3 (mod 4) from a lower
/// bound d_low on the minimum distance plus the few low-weight counts the
/// triangular system needs.
///
/// With m the smallest integer >= d_low - 1 with m == 3 (mod 4), the ansatz
/// sets a_i = 0 for i < m and solves for the U = #{i == 3 (mod 4), m <= i <= p}
/// remaining coefficients by comparing x^{2p-t} y^t coefficients for even
/// t <= 2(U-1). A_0 = 1 and A_t = 0 for 0 < t < d_low (and odd t) are forced;
/// every other needed A_t must appear in `known`, else InsufficientKnowns
/// lists the missing indices.
///
/// The result is re-validated (nonnegative integers, symmetry, sum 2^p,
/// divisibility order >= m); ValidationFailed signals a wrong d_low or bad
/// known counts.
WeightDistribution gleason_reconstruct(int p, int d_low, const std::map<int, mpz_class>& known);

}  // namespace qqr
