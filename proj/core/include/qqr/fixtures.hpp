#pragma once

#include <gmpxx.h>

#include <map>
#include <utility>

namespace qqr::fixtures {

/// Corrections to the published online table of QR weight distributions.
///
/// p = 113, [113,57,15]: the published A_56 = A_57 and the corrected value.
/// Every other entry of the published table is reported correct.
std::pair<mpz_class, mpz_class> p113_pair();  // {posted, corrected}
inline constexpr int kP113Indices[2] = {56, 57};

/// p = 127, [127,64,19]: rows i with published/corrected disagreements
/// (mirrors A_{127-i} follow by symmetry). Key: weight i; value:
/// {posted, corrected}.
const std::map<int, std::pair<mpz_class, mpz_class>>& p127_rows();

}  // namespace qqr::fixtures
