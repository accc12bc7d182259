#pragma once

#include <complex>
#include <vector>

#include "qqr/hompoly.hpp"

namespace qqr {

/// Duursma zeta polynomial P_0..P_r, r = n + 2 - d - dperp: the unique
/// degree-r rational polynomial with
///   [T^{n-d}] (xT + y(1-T))^n P(T) / ((1-T)(1-qT)) = (A(x,y) - x^n) / (q-1).
struct ZetaPolynomial {
    int q = 2;
    std::size_t n = 0;
    int d = 0, dperp = 0;
    std::vector<mpq_class> coeffs;  // P_0..P_r

    std::size_t degree() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
};

/// Solves the defining linear system exactly and re-verifies every coefficient
/// equation afterwards. SingularSystem signals wrong d/dperp inputs (the
/// system is then inconsistent, underdetermined, or forces deg P < r).
ZetaPolynomial zeta_polynomial(const HomPoly& a, std::size_t n, int d, int dperp, int q = 2);

/// P(T) = q^g T^{2g} P(1/(qT)) with g = r/2, checked exactly.
bool functional_equation_selfdual(const ZetaPolynomial& z);

struct RhReport {
    std::vector<std::complex<double>> roots;
    std::vector<double> moduli;
    double target = 0;  // q^{-1/2}
    double tol = 0;
    bool pass = false;  // all | |root| - target | <= tol
    std::vector<double> real_roots;
    int conjugate_pairs_on_circle = 0;  // Im > 0 and modulus within 1e-8 of target
    bool root_consistency_ok = false;   // symmetric functions of roots match P
};

/// Companion-matrix eigenvalues polished by Newton iteration; purely a
/// floating-point report on an exact polynomial.
RhReport rh_check(const ZetaPolynomial& z, double tol = 1e-8);

}  // namespace qqr
