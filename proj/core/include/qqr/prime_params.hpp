#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "qqr/bitvec.hpp"

namespace qqr {

/// Quadratic residue / non-residue split of {1..p-1}.
std::pair<std::vector<int>, std::vector<int>> quadratic_residue_split(int p);

/// Precomputed arithmetic for one odd prime p: the residue split, the
/// quadratic character table, and the smallest primitive root.
class PrimeParams {
   public:
    /// Throws NotPrime unless p is an odd prime.
    static PrimeParams make(int p);

    int p() const { return p_; }
    int residue_class() const { return p_ % 8; }
    int rho() const { return rho_; }

    const std::vector<int>& residues() const { return residues_; }
    const std::vector<int>& nonresidues() const { return nonresidues_; }

    /// chi(a) for a in [0, p): 0, +1 or -1.
    int chi(int a) const { return chi_[a]; }
    bool is_residue(int a) const { return chi_[a] == 1; }

    /// r_Q and r_N as coefficient vectors of length p.
    const BitVector& r_q() const { return r_q_; }
    const BitVector& r_n() const { return r_n_; }

    int inverse_mod_p(int a) const;

   private:
    PrimeParams() = default;
    int p_ = 0;
    int rho_ = 0;
    std::vector<int> residues_, nonresidues_;
    std::vector<int8_t> chi_;
    BitVector r_q_, r_n_;
};

/// Product in GF(2)[x]/(x^p - 1); inputs are coefficient vectors of length p.
BitVector cyclic_product(const BitVector& a, const BitVector& b);

}  // namespace qqr
