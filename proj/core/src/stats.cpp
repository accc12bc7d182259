#include "qqr/stats.hpp"

#include <algorithm>
#include <cmath>

#include "qqr/errors.hpp"

namespace qqr {

namespace {

mpq_class pow_q(const mpq_class& b, int e) {
    mpq_class acc = 1;
    for (int i = 0; i < e; ++i) acc *= b;
    return acc;
}

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

}  // namespace

mpq_class MomentReport::standardized_exact(int r) const {
    const mpq_class& m = central.at(static_cast<std::size_t>(r));
    if (r % 2 == 0) return m / pow_q(sigma2, r / 2);
    if (m == 0) return 0;
    throw Error("standardized_exact: odd-order moment of an asymmetric distribution is irrational");
}

double MomentReport::standardized(int r) const {
    const double m = central.at(static_cast<std::size_t>(r)).get_d();
    return m / std::pow(std::sqrt(sigma2.get_d()), r);
}

MomentReport moments(const WeightDistribution& w, int max_order) {
    MomentReport rep;
    rep.n = w.n;
    mpz_class size = 1;
    size <<= w.k;

    std::vector<mpq_class> a(w.n + 1);
    int support = 0;
    for (std::size_t j = 0; j <= w.n; ++j) {
        mpq_class v(w.counts[j], size);
        v.canonicalize();
        a[j] = v;
        if (v != 0) ++support;
    }
    for (std::size_t j = 0; j <= w.n; ++j) rep.mu += mpq_class(static_cast<long>(j)) * a[j];
    for (std::size_t j = 0; j <= w.n; ++j)
        rep.sigma2 += pow_q(rep.mu - static_cast<long>(j), 2) * a[j];
    if (support <= 1 || rep.sigma2 == 0)
        throw ZeroVariance("moments: single-weight distribution has no spread");

    rep.central.resize(static_cast<std::size_t>(max_order) + 1);
    for (int r = 0; r <= max_order; ++r)
        for (std::size_t j = 0; j <= w.n; ++j)
            rep.central[static_cast<std::size_t>(r)] +=
                pow_q(rep.mu - static_cast<long>(j), r) * a[j];
    return rep;
}

CdfTable cdf_compare(const WeightDistribution& w, int dperp, const GridSpec& grid) {
    if (dperp < 3) throw PreconditionFailed("cdf_compare: requires dperp >= 3");
    const MomentReport m = moments(w, 2);

    CdfTable table;
    table.mu = m.mu.get_d();
    table.sigma = std::sqrt(m.sigma2.get_d());
    table.bound = 20.0 / std::sqrt(static_cast<double>(dperp));

    mpz_class size = 1;
    size <<= w.k;
    // Jumps at z_j = (mu - j)/sigma, ascending z <=> descending j.
    struct Jump {
        double z;
        double mass;
    };
    std::vector<Jump> jumps;
    for (std::size_t j = w.n + 1; j-- > 0;) {
        if (w.counts[j] == 0) continue;
        mpq_class mass(w.counts[j], size);
        mass.canonicalize();
        jumps.push_back({(table.mu - static_cast<double>(j)) / table.sigma, mass.get_d()});
    }

    double cum = 0;
    table.sup_distance = 0;
    std::vector<CdfPoint> jump_points;
    for (const auto& jp : jumps) {
        const double phi = normal_cdf(jp.z);
        table.sup_distance = std::max(table.sup_distance, std::abs(cum - phi));  // left limit
        cum += jp.mass;
        table.sup_distance = std::max(table.sup_distance, std::abs(cum - phi));  // at the jump
        jump_points.push_back({jp.z, cum, phi});
    }
    // The step function is flat outside the jumps; the comparison at the grid
    // ends bounds the tails.
    auto a_of = [&](double z) {
        double acc = 0;
        for (const auto& jp : jumps)
            if (jp.z <= z) acc += jp.mass;
        return acc;
    };
    for (double z : {grid.lo, grid.hi})
        table.sup_distance = std::max(table.sup_distance, std::abs(a_of(z) - normal_cdf(z)));

    for (double z = grid.lo; z <= grid.hi + 1e-12; z += grid.step)
        table.points.push_back({z, a_of(z), normal_cdf(z)});
    table.points.insert(table.points.end(), jump_points.begin(), jump_points.end());
    std::sort(table.points.begin(), table.points.end(),
              [](const CdfPoint& x, const CdfPoint& y) { return x.z < y.z; });

    table.within_bound = table.sup_distance <= table.bound;
    return table;
}

BoundsReport bounds_report(int p, int d) {
    BoundsReport rep;
    rep.p = p;
    rep.d = d;
    rep.delta = static_cast<double>(d) / (2.0 * p);
    rep.exceeds_gv = rep.delta > 0.11;

    auto h2 = [](double x) {
        if (x <= 0.0 || x >= 1.0) return 0.0;
        return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
    };
    rep.gv_rate_at_delta = 1.0 - h2(rep.delta);

    // delta with 1 - H2(delta) = 1/2, bisected on (0, 1/2).
    double lo = 1e-9, hi = 0.5 - 1e-9;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (1.0 - h2(mid) > 0.5)
            lo = mid;
        else
            hi = mid;
    }
    rep.gv_delta_at_half_rate = 0.5 * (lo + hi);

    const double sq = std::sqrt(static_cast<double>(p));
    if (p % 8 == 3) {
        rep.helleseth_voloch = 2.0 * (p + sq) / (sq + 3.0);
        rep.distance_bound_ok = d >= *rep.helleseth_voloch - 1e-12;
    } else if (p % 8 == 7) {
        rep.sqrt_bound = sq + 1.0;
        rep.distance_bound_ok = d >= *rep.sqrt_bound - 1e-12;
    }
    return rep;
}

}  // namespace qqr
