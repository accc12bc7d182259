#include "qqr/curve_lab.hpp"

#include <bit>
#include <random>
#include <thread>

#include "qqr/errors.hpp"

namespace qqr {

namespace {

// Sign bookkeeping for the subset walk: sigma has bit a set iff
// prod_{s in S} chi(a - s) = -1. Toggling element s XORs one fixed mask.
struct SignScanner {
    int p;
    std::uint64_t full;
    std::vector<std::uint64_t> flip;  // flip[s] = {a : chi(a - s) = -1}

    explicit SignScanner(const PrimeParams& pp) : p(pp.p()), full((std::uint64_t{1} << p) - 1) {
        flip.resize(static_cast<std::size_t>(p));
        for (int s = 0; s < p; ++s) {
            std::uint64_t m = 0;
            for (int a = 0; a < p; ++a)
                if (pp.chi((a - s + p) % p) == -1) m |= std::uint64_t{1} << a;
            flip[static_cast<std::size_t>(s)] = m;
        }
    }

    std::uint64_t sigma_of(std::uint64_t members) const {
        std::uint64_t sigma = 0;
        while (members) {
            sigma ^= flip[static_cast<std::size_t>(std::countr_zero(members))];
            members &= members - 1;
        }
        return sigma;
    }

    // |X_S| = 2p - |S| - 2 * #{a not in S : sign is -1}.
    int affine_points(std::uint64_t sigma, std::uint64_t members) const {
        const int size = std::popcount(members);
        const int neg = std::popcount(sigma & ~members & full);
        return 2 * p - size - 2 * neg;
    }
};

void require_p(const PrimeParams& pp, const SubsetS& s) {
    if (pp.p() != s.p) throw LengthMismatch("subset prime != params prime");
    if (s.p > 63) throw BudgetExceeded("subset scans support p <= 63");
}

}  // namespace

int SubsetS::size() const { return std::popcount(members); }

SubsetS SubsetS::complement() const {
    return {p, ~members & ((std::uint64_t{1} << p) - 1)};
}

int count_affine_points(const PrimeParams& pp, const SubsetS& s) {
    require_p(pp, s);
    const SignScanner scan(pp);
    return scan.affine_points(scan.sigma_of(s.members), s.members);
}

bool weight_match_check(const PrimeParams& pp, const SubsetS& s) {
    require_p(pp, s);
    if (pp.p() % 4 != 3) throw WrongResidueClass("weight_match_check requires p == 3 (mod 4)");
    BitVector r_s(static_cast<std::size_t>(s.p));
    for (int a = 0; a < s.p; ++a)
        if ((s.members >> a) & 1) r_s.set(static_cast<std::size_t>(a));
    const std::size_t wt = cyclic_product(pp.r_q(), r_s).weight() +
                           cyclic_product(pp.r_n(), r_s).weight();
    if (s.size() % 2 == 0)
        return static_cast<int>(wt) == 2 * s.p - count_affine_points(pp, s);
    return static_cast<int>(wt) == count_affine_points(pp, s.complement());
}

mpz_class PointDistribution::total() const {
    mpz_class t = 0;
    for (const auto& [k, v] : counts) t += v;
    return t;
}

mpz_class PointDistribution::at(int k) const {
    auto it = counts.find(k);
    return it == counts.end() ? mpz_class(0) : it->second;
}

PointDistribution point_distribution(const PrimeParams& pp, std::uint64_t budget,
                                     unsigned threads) {
    const int p = pp.p();
    if (p % 4 != 3) throw WrongResidueClass("point_distribution requires p == 3 (mod 4)");
    if (p > 63 || (std::uint64_t{1} << (p - 1)) > budget)
        throw BudgetExceeded("point_distribution: 2^{p-1} exceeds budget");

    const SignScanner scan(pp);
    const std::uint64_t total = std::uint64_t{1} << p;
    if (threads == 0) {
        threads = std::max(1u, std::thread::hardware_concurrency());
        if (total < (std::uint64_t{1} << 16)) threads = 1;
    }
    if (static_cast<std::uint64_t>(threads) > total) threads = static_cast<unsigned>(total);

    std::vector<std::vector<std::uint64_t>> hists(
        threads, std::vector<std::uint64_t>(static_cast<std::size_t>(2 * p + 1), 0));
    auto run = [&](unsigned t) {
        const std::uint64_t begin = total / threads * t;
        const std::uint64_t end = (t + 1 == threads) ? total : total / threads * (t + 1);
        if (begin >= end) return;
        auto gray = [](std::uint64_t i) { return i ^ (i >> 1); };
        std::uint64_t members = gray(begin);
        std::uint64_t sigma = scan.sigma_of(members);
        auto& h = hists[t];
        auto tally = [&] {
            if ((std::popcount(members) & 1) == 0)
                ++h[static_cast<std::size_t>(scan.affine_points(sigma, members))];
        };
        tally();
        for (std::uint64_t idx = begin + 1; idx < end; ++idx) {
            const int bit = std::countr_zero(idx);
            members ^= std::uint64_t{1} << bit;
            sigma ^= scan.flip[static_cast<std::size_t>(bit)];
            tally();
        }
    };
    if (threads == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(run, t);
        for (auto& th : pool) th.join();
    }

    PointDistribution out;
    out.p = p;
    for (const auto& h : hists)
        for (std::size_t k = 0; k < h.size(); ++k)
            if (h[k]) out.counts[static_cast<int>(k)] += mpz_class(static_cast<unsigned long>(h[k]));
    return out;
}

bool interlace_check(const WeightDistribution& a, const PointDistribution& b) {
    const int p = b.p;
    if (a.n != static_cast<std::size_t>(2 * p))
        throw LengthMismatch("interlace_check: distribution length != 2p");
    for (int k = 0; k <= 2 * p; ++k) {
        const mpz_class& ak = a.counts[static_cast<std::size_t>(k)];
        if (k % 2 == 1 && ak != 0) return false;
        if (k % 4 == 0 && ak != b.at(2 * p - k)) return false;
        if (k % 4 == 2 && ak != b.at(k)) return false;
        if (ak != b.at(k) + b.at(2 * p - k)) return false;
    }
    return true;
}

CongruenceReport congruence_scan(const PrimeParams& pp, std::optional<std::uint64_t> sample_count,
                                 std::uint64_t seed, std::uint64_t budget) {
    const int p = pp.p();
    if (p > 63) throw BudgetExceeded("congruence_scan supports p <= 63");
    const SignScanner scan(pp);
    CongruenceReport rep;

    auto check = [&](std::uint64_t members, std::uint64_t sigma) {
        const int pts = scan.affine_points(sigma, members);
        const int want = (std::popcount(members) & 1) ? 3 : 2;
        ++rep.checked;
        if ((pts & 3) != want) {
            ++rep.violations;
            if (!rep.first_violation) rep.first_violation = members;
        }
    };

    if (!sample_count) {
        if ((std::uint64_t{1} << p) > budget)
            throw BudgetExceeded("congruence_scan: 2^p exceeds budget; use sampling");
        std::uint64_t members = 0, sigma = 0;
        check(members, sigma);
        const std::uint64_t total = std::uint64_t{1} << p;
        for (std::uint64_t idx = 1; idx < total; ++idx) {
            const int bit = std::countr_zero(idx);
            members ^= std::uint64_t{1} << bit;
            sigma ^= scan.flip[static_cast<std::size_t>(bit)];
            check(members, sigma);
        }
        return rep;
    }

    std::mt19937_64 rng(seed);
    const std::uint64_t mask = (std::uint64_t{1} << p) - 1;
    for (std::uint64_t i = 0; i < *sample_count; ++i) {
        const std::uint64_t members = rng() & mask;
        check(members, scan.sigma_of(members));
    }
    return rep;
}

}  // namespace qqr
