#include "qqr/qr_solver.hpp"

#include <sstream>

#include "mpq_linalg.hpp"
#include "qqr/hompoly.hpp"

namespace qqr {

WeightDistribution qr_reconstruct(int p, int d, const std::map<int, mpz_class>& known) {
    if (p < 1 || d < 0 || d > p) throw ValidationFailed("qr_reconstruct: bad p or d");
    for (const auto& [j, v] : known)
        if (j < 0 || j > p) throw ValidationFailed("qr_reconstruct: known index out of range");

    // Close the knowns: explicit values first, then the forced classes.
    std::map<int, mpz_class> a = known;
    auto put_default = [&](int j, const mpz_class& v) { a.emplace(j, v); };
    if (d > 0) {
        put_default(0, 1);
        for (int j = 1; j < d; ++j) put_default(j, 0);
    }
    // Weights of a QR code are 0 or 3 (mod 4) only when p == 7 (mod 8); for
    // p == 1 (mod 8) every residue class occurs, so no zeros are forced.
    if (p % 8 == 7)
        for (int j = 0; j <= p; ++j)
            if (j % 4 == 1 || j % 4 == 2) put_default(j, 0);
    for (auto it = a.begin(); it != a.end(); ++it) {
        const int mirror = p - it->first;
        auto [mit, inserted] = a.emplace(mirror, it->second);
        if (!inserted && mit->second != it->second) {
            std::ostringstream os;
            os << "qr_reconstruct: A_" << it->first << " = " << it->second
               << " clashes with A_" << mirror << " = " << mit->second << " under symmetry";
            throw InconsistentSystem(os.str());
        }
    }

    // Unknowns c_0..c_D with c_i = c_{D-i}; one equation per closed A_j.
    const int cap_d = p - d;
    const int free_vars = cap_d / 2 + 1;
    mpz_class binom;
    std::vector<std::vector<mpq_class>> mat;
    std::vector<mpq_class> rhs;
    for (const auto& [j, v] : a) {
        std::vector<mpq_class> row(static_cast<std::size_t>(free_vars), mpq_class(0));
        for (int i = std::max(0, j - d); i <= std::min(cap_d, j); ++i) {
            mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(d),
                         static_cast<unsigned long>(j - i));
            const int fold = std::min(i, cap_d - i);
            row[static_cast<std::size_t>(fold)] += mpq_class(binom);
        }
        mat.push_back(std::move(row));
        rhs.emplace_back(v);
    }

    auto solved = detail::solve_exact(std::move(mat), std::move(rhs));
    if (solved.status == detail::SolveResult::Status::inconsistent)
        throw InconsistentSystem("qr_reconstruct: known counts contradict (x+y)^d divisibility");
    if (solved.status == detail::SolveResult::Status::underdetermined) {
        std::ostringstream os;
        os << "qr_reconstruct: not enough known counts; missing A_j for j =";
        for (int j = 0; j <= p; ++j)
            if (!a.count(j)) os << ' ' << j;
        throw InsufficientKnowns(os.str());
    }

    HomPoly c(static_cast<std::size_t>(cap_d));
    for (int i = 0; i <= cap_d; ++i)
        c.coeff(static_cast<std::size_t>(i)) =
            solved.solution[static_cast<std::size_t>(std::min(i, cap_d - i))];
    const HomPoly full = HomPoly::x_plus_y_power(static_cast<std::size_t>(d)) * c;

    WeightDistribution w;
    w.n = static_cast<std::size_t>(p);
    w.k = static_cast<std::size_t>((p + 1) / 2);
    try {
        w.counts = full.to_counts();
    } catch (const Error& e) {
        throw InconsistentSystem(std::string("qr_reconstruct: solution is not a distribution (") +
                                 e.what() + ")");
    }
    w.provenance = WeightDistribution::Provenance::reconstructed;
    return w;
}

}  // namespace qqr
