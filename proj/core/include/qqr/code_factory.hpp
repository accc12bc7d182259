#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qqr/linear_code.hpp"
#include "qqr/prime_params.hpp"

namespace qqr {

/// Code families constructible from one prime.
///
/// Residue-class requirements:
///   qr_q, qr_n, expurgated_q, expurgated_n : p == +-1 (mod 8)
///   qqr                                    : any odd prime
///   qqr_std_form, c0, c0_perp, extended    : p == 3 (mod 4)
enum class CodeFamily {
    qr_q,
    qr_n,
    expurgated_q,
    expurgated_n,
    qqr,
    qqr_std_form,
    c0,
    c0_perp,
    extended,
};

const char* family_name(CodeFamily f);
CodeFamily family_from_name(const std::string& name);  // throws ParseError

/// Builds the requested family; throws WrongResidueClass on a family/p
/// mismatch.
LinearCode build(const PrimeParams& params, CodeFamily family);

/// r_Q * r_Q == r_N and r_Q * r_N == 1 in GF(2)[x]/(x^p - 1).
/// Requires p == 3 (mod 8).
bool perron_identity_check(const PrimeParams& params);

/// Whether the row spaces of [G_Q|G_N] and [I|G_Q] coincide. Requires
/// p == 3 (mod 4); true exactly for p == 3 (mod 8).
bool standard_form_check(const PrimeParams& params);

struct EvenSubcodeRelation {
    bool equal = false;   // QQR(p) == even_subcode(QR_Q(p) (+) QR_N(p))
    int d_qqr = 0;
    int d_qr = 0;
};

/// Requires p == 7 (mod 8); also asserts d_qqr == d_qr + 1 via brute force.
EvenSubcodeRelation even_subcode_relation_check(const PrimeParams& params,
                                                std::uint64_t budget = kDefaultEnumerationBudget);

enum class Half { left, right };

/// One coordinate of the extended code: 0..p-1 or the parity position
/// (index == p, printed as "inf") on either half.
struct PositionLabel {
    Half half = Half::left;
    int index = 0;

    /// Flat coordinate in the 2p+2 layout (left 0..p-1, left inf, right
    /// 0..p-1, right inf).
    int flat(int p) const { return (half == Half::left ? 0 : p + 1) + index; }
    static PositionLabel from_flat(int pos, int p);
};

/// A permutation of the 2p+2 extended-code coordinates acting identically on
/// both halves.
struct PermutationAction {
    std::string name;
    std::vector<int> map;  // map[i] = image of coordinate i

    bool is_identity() const;
};

struct Psl2Generators {
    PermutationAction s;  // y -> y+1
    PermutationAction v;  // y -> rho^2 y
    PermutationAction t;  // y -> -1/y, with 0 <-> inf
};

/// Requires p == 3 (mod 4).
Psl2Generators psl2_generators(const PrimeParams& params);

/// True iff perm maps c onto itself (every permuted generator row stays in c).
bool automorphism_check(const LinearCode& c, const PermutationAction& perm);

}  // namespace qqr
