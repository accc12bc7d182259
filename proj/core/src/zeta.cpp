#include "qqr/zeta.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>

#include "mpq_linalg.hpp"

namespace qqr {

namespace {

// h_m = 1 + q + ... + q^m, the T^m coefficient of 1/((1-T)(1-qT)).
mpq_class geometric_sum(int q, long m) {
    if (m < 0) return 0;
    mpz_class num;
    mpz_ui_pow_ui(num.get_mpz_t(), static_cast<unsigned long>(q),
                  static_cast<unsigned long>(m + 1));
    num -= 1;
    return mpq_class(num) / mpq_class(q - 1);
}

}  // namespace

ZetaPolynomial zeta_polynomial(const HomPoly& a, std::size_t n, int d, int dperp, int q) {
    if (a.degree() != n) throw LengthMismatch("zeta_polynomial: enumerator degree != n");
    const long r = static_cast<long>(n) + 2 - d - dperp;
    if (r < 0) throw SingularSystem("zeta_polynomial: n + 2 - d - dperp is negative");

    // One equation per monomial x^t y^{n-t}:
    //   C(n,t) * sum_s P_s * D(t, n-d-s) = (A_{n-t} - [t=n]) / (q-1)
    // with D(t, M) = sum_v C(n-t, v) (-1)^v h_{M-t-v}.
    mpz_class bin;
    std::vector<std::vector<mpq_class>> mat;
    std::vector<mpq_class> rhs;
    for (std::size_t t = 0; t <= n; ++t) {
        std::vector<mpq_class> row(static_cast<std::size_t>(r) + 1);
        mpz_bin_uiui(bin.get_mpz_t(), n, t);
        const mpq_class cnt(bin);
        for (long s = 0; s <= r; ++s) {
            const long m = static_cast<long>(n) - d - s - static_cast<long>(t);
            mpq_class acc = 0;
            const long vmax = std::min<long>(static_cast<long>(n - t), m);
            for (long v = 0; v <= vmax; ++v) {
                mpz_bin_uiui(bin.get_mpz_t(), n - t, static_cast<unsigned long>(v));
                const mpq_class term = mpq_class(bin) * geometric_sum(q, m - v);
                acc += (v & 1) ? -term : term;
            }
            row[static_cast<std::size_t>(s)] = cnt * acc;
        }
        const GaussianRational& coeff = a.coeff(n - t);  // A_{n-t} multiplies x^t y^{n-t}
        if (!coeff.is_real()) throw SingularSystem("zeta_polynomial: complex enumerator");
        mpq_class b = coeff.re;
        if (t == n) b -= 1;
        rhs.push_back(b / mpq_class(q - 1));
        mat.push_back(std::move(row));
    }

    auto solved = detail::solve_exact(std::move(mat), std::move(rhs));
    if (solved.status != detail::SolveResult::Status::unique)
        throw SingularSystem("zeta_polynomial: defining system has no unique solution (check d, dperp)");
    if (solved.solution.back() == 0)
        throw SingularSystem("zeta_polynomial: leading coefficient vanishes; dperp is too small");

    ZetaPolynomial z;
    z.q = q;
    z.n = n;
    z.d = d;
    z.dperp = dperp;
    z.coeffs = std::move(solved.solution);
    return z;
}

bool functional_equation_selfdual(const ZetaPolynomial& z) {
    const std::size_t r = z.degree();
    if (r % 2 != 0) return false;
    const std::size_t g = r / 2;
    for (std::size_t u = 0; u <= r; ++u) {
        // P_u = q^{u-g} P_{r-u}
        mpq_class lhs = z.coeffs[u];
        mpq_class rhs = z.coeffs[r - u];
        if (u >= g) {
            mpz_class f;
            mpz_ui_pow_ui(f.get_mpz_t(), static_cast<unsigned long>(z.q),
                          static_cast<unsigned long>(u - g));
            rhs *= mpq_class(f);
        } else {
            mpz_class f;
            mpz_ui_pow_ui(f.get_mpz_t(), static_cast<unsigned long>(z.q),
                          static_cast<unsigned long>(g - u));
            lhs *= mpq_class(f);
        }
        if (lhs != rhs) return false;
    }
    return true;
}

RhReport rh_check(const ZetaPolynomial& z, double tol) {
    RhReport rep;
    rep.tol = tol;
    rep.target = 1.0 / std::sqrt(static_cast<double>(z.q));

    const std::size_t r = z.degree();
    if (r == 0) {
        rep.pass = true;  // no roots
        rep.root_consistency_ok = true;
        return rep;
    }

    std::vector<double> c(r + 1);
    for (std::size_t i = 0; i <= r; ++i) c[i] = z.coeffs[i].get_d();

    Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(static_cast<int>(r), static_cast<int>(r));
    for (std::size_t i = 1; i < r; ++i) companion(static_cast<int>(i), static_cast<int>(i - 1)) = 1.0;
    for (std::size_t i = 0; i < r; ++i)
        companion(static_cast<int>(i), static_cast<int>(r - 1)) = -c[i] / c[r];
    Eigen::EigenSolver<Eigen::MatrixXd> solver(companion);

    // Newton polish in extended precision against the exact coefficients.
    std::vector<std::complex<long double>> cl(r + 1);
    for (std::size_t i = 0; i <= r; ++i) cl[i] = static_cast<long double>(c[i]);
    auto horner = [&](std::complex<long double> x) {
        std::complex<long double> p = cl[r], dp = 0;
        for (std::size_t i = r; i-- > 0;) {
            dp = dp * x + p;
            p = p * x + cl[i];
        }
        return std::pair(p, dp);
    };

    for (std::size_t i = 0; i < r; ++i) {
        std::complex<long double> x(solver.eigenvalues()[static_cast<int>(i)].real(),
                                    solver.eigenvalues()[static_cast<int>(i)].imag());
        for (int it = 0; it < 60; ++it) {
            auto [p, dp] = horner(x);
            if (dp == std::complex<long double>(0)) break;
            const auto step = p / dp;
            x -= step;
            if (std::abs(step) < 1e-19L * std::max<long double>(1.0L, std::abs(x))) break;
        }
        rep.roots.emplace_back(static_cast<double>(x.real()), static_cast<double>(x.imag()));
    }
    std::sort(rep.roots.begin(), rep.roots.end(), [](const auto& a, const auto& b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });

    rep.pass = true;
    for (const auto& root : rep.roots) {
        const double m = std::abs(root);
        rep.moduli.push_back(m);
        if (std::abs(m - rep.target) > tol) rep.pass = false;
        if (std::abs(root.imag()) <= 1e-9 * std::max(1.0, std::abs(root.real())))
            rep.real_roots.push_back(root.real());
        if (root.imag() > 0 && std::abs(m - rep.target) <= 1e-8) ++rep.conjugate_pairs_on_circle;
    }
    std::sort(rep.real_roots.begin(), rep.real_roots.end());

    // Guard the root finder: sum and product of roots vs. coefficients.
    std::complex<double> sum = 0, prod = 1;
    for (const auto& root : rep.roots) {
        sum += root;
        prod *= root;
    }
    const double sum_ref = -c[r - 1] / c[r];
    double prod_ref = c[0] / c[r];
    if (r % 2 == 1) prod_ref = -prod_ref;
    auto close = [](std::complex<double> got, double want) {
        return std::abs(got - want) <= 1e-6 * std::max(1.0, std::abs(want));
    };
    rep.root_consistency_ok = close(sum, sum_ref) && close(prod, prod_ref);
    return rep;
}

}  // namespace qqr
