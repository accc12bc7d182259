#pragma once

#include <optional>
#include <vector>

#include "qqr/weight_distribution.hpp"

namespace qqr {

/// Exact mean, variance and central moments of the normalized weight
/// distribution a_j = A_j / 2^k.
struct MomentReport {
    std::size_t n = 0;
    mpq_class mu;       // sum j a_j; equals n/2 for symmetric distributions
    mpq_class sigma2;   // sum (mu - j)^2 a_j
    std::vector<mpq_class> central;  // central[r] = sum (mu - j)^r a_j, r = 0..max_order

    /// Standardized moment sum ((mu-j)/sigma)^r a_j. Exact for even r; for
    /// odd r exact only when the central sum vanishes (symmetric input).
    mpq_class standardized_exact(int r) const;
    double standardized(int r) const;
};

/// Throws ZeroVariance for single-weight (degenerate) inputs.
MomentReport moments(const WeightDistribution& w, int max_order = 4);

struct GridSpec {
    double lo = -4.0;
    double hi = 4.0;
    double step = 0.01;
};

struct CdfPoint {
    double z = 0;
    double a = 0;    // A(z) = sum_{j >= mu - sigma z} a_j
    double phi = 0;  // standard normal c.d.f.
};

/// Step-function c.d.f. versus the normal law, with the Sidel'nikov bound
/// 20/sqrt(dperp). The sup-distance is evaluated at every jump of A(z) from
/// both sides (where the sup of a step-vs-continuous comparison lives) plus
/// the grid ends. Requires dperp >= 3.
struct CdfTable {
    std::vector<CdfPoint> points;  // grid plus jump points, ascending z
    double mu = 0, sigma = 0;
    double sup_distance = 0;
    double bound = 0;
    bool within_bound = false;
};

CdfTable cdf_compare(const WeightDistribution& w, int dperp, const GridSpec& grid = {});

/// Distance-bound report for a QQR code of prime p with minimum distance d.
struct BoundsReport {
    int p = 0, d = 0;
    double delta = 0;                  // d / 2p
    bool exceeds_gv = false;           // delta > 0.11
    double gv_rate_at_delta = 0;       // 1 - H2(delta), the GV rate at delta
    double gv_delta_at_half_rate = 0;  // delta solving 1 - H2(x) = 1/2 (~0.110)
    std::optional<double> helleseth_voloch;  // p == 3 (mod 8): 2(p+sqrt p)/(sqrt p+3)
    std::optional<double> sqrt_bound;        // p == 7 (mod 8): sqrt(p) + 1
    bool distance_bound_ok = true;
};

BoundsReport bounds_report(int p, int d);

}  // namespace qqr
