#include "qqr/enumerator.hpp"

#include <thread>

#include "qqr/gray.hpp"

namespace qqr {

void WeightDistribution::validate() const {
    if (counts.size() != n + 1) throw ValidationFailed("distribution: counts size != n+1");
    if (counts[0] != 1) throw ValidationFailed("distribution: A_0 != 1");
    for (const auto& c : counts)
        if (c < 0) throw ValidationFailed("distribution: negative count");
    mpz_class expect = 1;
    expect <<= k;
    if (total() != expect) throw ValidationFailed("distribution: sum != 2^k");
}

WeightDistribution make_distribution(std::size_t n, std::size_t k, std::vector<mpz_class> counts,
                                     WeightDistribution::Provenance prov) {
    WeightDistribution d;
    d.n = n;
    d.k = k;
    d.counts = std::move(counts);
    d.provenance = prov;
    d.validate();
    return d;
}

WeightDistribution weight_distribution(const LinearCode& c, std::uint64_t budget,
                                       unsigned threads) {
    const std::size_t k = c.k();
    if (k >= 64 || (std::uint64_t{1} << k) > budget)
        throw BudgetExceeded("weight_distribution: 2^k exceeds enumeration budget");
    const std::uint64_t total = std::uint64_t{1} << k;

    if (threads == 0) {
        threads = std::max(1u, std::thread::hardware_concurrency());
        if (total < (std::uint64_t{1} << 16)) threads = 1;
    }
    if (static_cast<std::uint64_t>(threads) > total) threads = static_cast<unsigned>(total);

    std::vector<std::vector<std::uint64_t>> hists(threads,
                                                  std::vector<std::uint64_t>(c.n() + 1, 0));
    auto run = [&](unsigned t) {
        const std::uint64_t begin = total / threads * t;
        const std::uint64_t end = (t + 1 == threads) ? total : total / threads * (t + 1);
        auto& h = hists[t];
        detail::walk_weights(c.generator(), begin, end, [&](std::size_t w) { ++h[w]; });
    };
    if (threads == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(run, t);
        for (auto& th : pool) th.join();
    }

    std::vector<mpz_class> counts(c.n() + 1, 0);
    for (const auto& h : hists)
        for (std::size_t j = 0; j <= c.n(); ++j)
            if (h[j]) counts[j] += mpz_class(static_cast<unsigned long>(h[j]));
    return make_distribution(c.n(), k, std::move(counts), WeightDistribution::Provenance::brute);
}

}  // namespace qqr
