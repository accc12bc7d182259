#pragma once

#include <array>
#include <string>

#include "qqr/table_io.hpp"

namespace qqr {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string witness;  // failing indices / mismatching values, or the measured quantity
};

/// The four structural checks every correct QR weight table must satisfy:
///   1. p | A_i for 0 < i < p (cyclic shifts act freely off 0 and the
///      all-ones word),
///   2. sum A_i = 2^k,
///   3. (x+y)^d | A(x,y),
///   4. the extended enumerator f(x,y) = x*even(A) + y*odd(A) satisfies
///      f = 2^{-k} f(x+y, x-y).
struct AuditReport {
    std::array<CheckResult, 4> checks;
    bool pass = false;
};

/// Runs all four checks with exact arithmetic. Throws IncompleteTable when
/// any A_j with 0 <= j <= p is missing.
AuditReport audit_table(const WeightTableFile& t);

}  // namespace qqr
