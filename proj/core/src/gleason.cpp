#include "qqr/gleason.hpp"

#include <algorithm>
#include <sstream>

namespace qqr {

GleasonDecomposition gleason_decompose(const HomPoly& a) {
    const std::size_t deg = a.degree();
    if (deg == 0 || deg % 2 != 0)
        throw NotInGleasonRing("gleason_decompose: degree must be a positive even number");

    GleasonDecomposition out;
    out.degree = deg;

    HomPoly residual = a;
    const HomPoly g = HomPoly::gleason_g();
    const HomPoly jpoly = HomPoly::gleason_j();

    HomPoly jpow = HomPoly::x_power(0);  // J^j, grown incrementally
    for (int j = 0;; ++j) {
        const long i2 = static_cast<long>(deg) - 8L * j;
        if (i2 < 0) break;
        const int i = static_cast<int>(i2 / 2);
        // G^i J^j is the only basis element with a nonzero x^{D-2j} y^{2j}
        // term (coefficient 1), so a_i is read off the residual directly.
        const GaussianRational& c = residual.coeff(2 * j);
        if (!c.is_real())
            throw NotInGleasonRing("gleason_decompose: complex coefficient encountered");
        out.coeffs[i] = c.re;
        if (!c.is_zero()) residual -= (g.pow(i) * jpow) * c;
        if (8L * (j + 1) > static_cast<long>(deg)) break;
        jpow = jpow * jpoly;
    }
    if (!residual.is_zero())
        throw NotInGleasonRing(
            "gleason_decompose: nonzero residual; input is not an even self-dual enumerator");
    return out;
}

HomPoly gleason_expand(const GleasonDecomposition& d) {
    HomPoly acc(d.degree);
    const HomPoly g = HomPoly::gleason_g();
    const HomPoly jpoly = HomPoly::gleason_j();
    for (const auto& [i, a] : d.coeffs) {
        if (a == 0) continue;
        const int j = static_cast<int>((d.degree - 2 * static_cast<std::size_t>(i)) / 8);
        acc += (g.pow(i) * jpoly.pow(j)) * GaussianRational(a);
    }
    return acc;
}

WeightDistribution gleason_reconstruct(int p, int d_low, const std::map<int, mpz_class>& known) {
    if (p < 3 || p % 4 != 3)
        throw WrongResidueClass("gleason_reconstruct: requires p == 3 (mod 4)");
    if (d_low < 1) throw ValidationFailed("gleason_reconstruct: d_low must be positive");

    int m = d_low - 1;
    while (m % 4 != 3) ++m;
    if (m > p) throw ValidationFailed("gleason_reconstruct: d_low too large for degree 2p");
    const int unknowns = (p - m) / 4 + 1;  // i = m, m+4, ..., p

    // A_t for the even t the triangular solve consumes.
    std::vector<int> missing;
    auto a_value = [&](int t) -> mpz_class {
        if (t == 0) return 1;
        if (t < d_low) return 0;
        if (auto it = known.find(t); it != known.end()) return it->second;
        missing.push_back(t);
        return 0;
    };
    std::vector<mpq_class> rhs;  // A_0, A_2, ..., A_{2(U-1)}
    for (int t = 0; t < unknowns; ++t) rhs.emplace_back(a_value(2 * t));
    if (!missing.empty()) {
        std::ostringstream os;
        os << "gleason_reconstruct: missing known counts A_j for j =";
        for (int j : missing) os << ' ' << j;
        throw InsufficientKnowns(os.str());
    }

    // Solve top-down: the t-th equation introduces exactly a_{p-4t}.
    const HomPoly g = HomPoly::gleason_g();
    const HomPoly jpoly = HomPoly::gleason_j();
    GleasonDecomposition dec;
    dec.degree = static_cast<std::size_t>(2 * p);
    std::vector<HomPoly> basis;  // G^{p-4t} J^t
    HomPoly jpow = HomPoly::x_power(0);
    for (int t = 0; t < unknowns; ++t) {
        if (t > 0) jpow = jpow * jpoly;
        basis.push_back(g.pow(p - 4 * t) * jpow);
    }
    std::vector<mpq_class> a(unknowns);
    for (int t = 0; t < unknowns; ++t) {
        mpq_class acc = rhs[static_cast<std::size_t>(t)];
        for (int s = 0; s < t; ++s) acc -= a[s] * basis[s].coeff(2 * t).re;
        // coefficient of y^{2t} in basis[t] is exactly 1
        a[t] = acc;
        dec.coeffs[p - 4 * t] = a[t];
    }
    // below m every coefficient is forced to zero by the divisibility ansatz
    for (int i = m - 4; i >= 0; i -= 4) dec.coeffs[i] = 0;

    const HomPoly poly = gleason_expand(dec);
    std::vector<mpz_class> counts;
    try {
        counts = poly.to_counts();
    } catch (const Error& e) {
        throw ValidationFailed(std::string("gleason_reconstruct: result is not a distribution (") +
                               e.what() + "); d_low or known counts are wrong");
    }

    WeightDistribution w;
    w.n = static_cast<std::size_t>(2 * p);
    w.k = static_cast<std::size_t>(p);
    w.counts = std::move(counts);
    w.provenance = WeightDistribution::Provenance::reconstructed;
    try {
        w.validate();
    } catch (const Error& e) {
        throw ValidationFailed(std::string("gleason_reconstruct: ") + e.what());
    }
    if (!w.symmetric()) throw ValidationFailed("gleason_reconstruct: result is not symmetric");
    if (divisibility_order(poly, DivisibilityFactor::x2_plus_y2) < m)
        throw ValidationFailed("gleason_reconstruct: divisibility order below ansatz");
    return w;
}

}  // namespace qqr
