#include "qqr/prime_params.hpp"

#include <cstdlib>

#include "qqr/errors.hpp"

namespace qqr {

namespace {

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; static_cast<long long>(d) * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

int pow_mod(long long base, long long exp, long long mod) {
    long long r = 1;
    base %= mod;
    while (exp > 0) {
        if (exp & 1) r = r * base % mod;
        base = base * base % mod;
        exp >>= 1;
    }
    return static_cast<int>(r);
}

std::vector<int> prime_factors(int n) {
    std::vector<int> fs;
    for (int d = 2; static_cast<long long>(d) * d <= n; ++d) {
        if (n % d == 0) {
            fs.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) fs.push_back(n);
    return fs;
}

int smallest_primitive_root(int p) {
    const auto factors = prime_factors(p - 1);
    for (int g = 2; g < p; ++g) {
        bool ok = true;
        for (int q : factors)
            if (pow_mod(g, (p - 1) / q, p) == 1) {
                ok = false;
                break;
            }
        if (ok) return g;
    }
    throw Error("no primitive root found");  // unreachable for prime p
}

}  // namespace

std::pair<std::vector<int>, std::vector<int>> quadratic_residue_split(int p) {
    if (!is_prime(p) || p < 3) throw NotPrime("quadratic_residue_split: p must be an odd prime");
    std::vector<bool> sq(p, false);
    for (long long x = 1; x < p; ++x) sq[x * x % p] = true;
    std::vector<int> q, n;
    for (int a = 1; a < p; ++a) (sq[a] ? q : n).push_back(a);
    return {q, n};
}

PrimeParams PrimeParams::make(int p) {
    auto [q, n] = quadratic_residue_split(p);
    PrimeParams pp;
    pp.p_ = p;
    pp.residues_ = std::move(q);
    pp.nonresidues_ = std::move(n);
    pp.chi_.assign(p, -1);
    pp.chi_[0] = 0;
    for (int a : pp.residues_) pp.chi_[a] = 1;
    pp.rho_ = smallest_primitive_root(p);
    pp.r_q_ = BitVector(p);
    for (int a : pp.residues_) pp.r_q_.set(a);
    pp.r_n_ = BitVector(p);
    for (int a : pp.nonresidues_) pp.r_n_.set(a);
    return pp;
}

int PrimeParams::inverse_mod_p(int a) const {
    a %= p_;
    if (a < 0) a += p_;
    if (a == 0) throw Error("inverse_mod_p: zero has no inverse");
    return pow_mod(a, p_ - 2, p_);
}

BitVector cyclic_product(const BitVector& a, const BitVector& b) {
    if (a.length() != b.length()) throw LengthMismatch("cyclic_product: lengths differ");
    const std::size_t p = a.length();
    BitVector out(p);
    for (std::size_t i = 0; i < p; ++i)
        if (a.get(i)) out ^= b.rotated(i);
    return out;
}

}  // namespace qqr
