#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <vector>

#include "qqr/errors.hpp"

namespace qqr {

/// Exact weight distribution A_0..A_n of an [n, k] code. Counts are
/// arbitrary-precision: ingested tables reach magnitudes where machine words
/// (and doubles) silently lose digits.
struct WeightDistribution {
    enum class Provenance { brute, reconstructed, ingested };

    std::size_t n = 0;
    std::size_t k = 0;
    std::vector<mpz_class> counts;  // size n+1
    Provenance provenance = Provenance::brute;

    mpz_class total() const {
        mpz_class s = 0;
        for (const auto& c : counts) s += c;
        return s;
    }

    /// Smallest j > 0 with A_j != 0; -1 when none exists.
    int min_support() const {
        for (std::size_t j = 1; j < counts.size(); ++j)
            if (counts[j] != 0) return static_cast<int>(j);
        return -1;
    }

    bool symmetric() const {
        for (std::size_t j = 0; j <= n; ++j)
            if (counts[j] != counts[n - j]) return false;
        return true;
    }

    /// Checks A_0 = 1 and sum = 2^k; throws ValidationFailed otherwise.
    void validate() const;
};

WeightDistribution make_distribution(std::size_t n, std::size_t k, std::vector<mpz_class> counts,
                                     WeightDistribution::Provenance prov);

}  // namespace qqr
