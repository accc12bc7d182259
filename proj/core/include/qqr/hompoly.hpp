#pragma once

#include <cstddef>
#include <vector>

#include "qqr/gaussian_rational.hpp"
#include "qqr/weight_distribution.hpp"

namespace qqr {

/// Homogeneous bivariate polynomial of fixed degree n with exact coefficients:
/// coeff(j) multiplies x^{n-j} y^j. Weight enumerators A_C(x,y), shadow
/// enumerators S_C(x,y) and the Gleason generators all live here.
class HomPoly {
   public:
    HomPoly() = default;
    explicit HomPoly(std::size_t degree) : coeff_(degree + 1) {}
    HomPoly(std::size_t degree, std::vector<GaussianRational> coeff);

    static HomPoly from_counts(const WeightDistribution& w);
    static HomPoly from_counts(const std::vector<mpz_class>& counts);

    /// x^n.
    static HomPoly x_power(std::size_t degree);
    /// (x + y)^n.
    static HomPoly x_plus_y_power(std::size_t degree);
    /// G = x^2 + y^2.
    static HomPoly gleason_g();
    /// J = x^2 y^2 (x^2 - y^2)^2.
    static HomPoly gleason_j();

    std::size_t degree() const { return coeff_.empty() ? 0 : coeff_.size() - 1; }
    const GaussianRational& coeff(std::size_t j) const { return coeff_[j]; }
    GaussianRational& coeff(std::size_t j) { return coeff_[j]; }
    const std::vector<GaussianRational>& coeffs() const { return coeff_; }

    bool is_zero() const;

    /// Exact integer counts; throws NonIntegerCoefficient / NegativeCoefficient.
    std::vector<mpz_class> to_counts() const;

    /// General linear substitution: returns A(ax*x + bx*y, ay*x + by*y).
    HomPoly substitute(const GaussianRational& ax, const GaussianRational& bx,
                       const GaussianRational& ay, const GaussianRational& by) const;

    /// A(x, -y): negates odd-j coefficients.
    HomPoly negate_y() const;
    /// A(y, x): reverses the coefficient sequence.
    HomPoly swap_xy() const;

    HomPoly& operator+=(const HomPoly& o);
    HomPoly& operator-=(const HomPoly& o);
    friend HomPoly operator+(HomPoly a, const HomPoly& b) { return a += b; }
    friend HomPoly operator-(HomPoly a, const HomPoly& b) { return a -= b; }
    HomPoly operator*(const HomPoly& o) const;
    HomPoly operator*(const GaussianRational& s) const;
    HomPoly pow(std::size_t e) const;

    bool operator==(const HomPoly&) const = default;

   private:
    std::vector<GaussianRational> coeff_;
};

/// MacWilliams transform 2^{-k} A(x+y, x-y); an involution on self-dual
/// enumerators.
HomPoly macwilliams(const HomPoly& a, std::size_t k);

/// Shadow enumerator 2^{-k} A(x+y, i(x-y)). Output must have nonnegative
/// integer coefficients for a valid self-orthogonal input; checked, and
/// NonIntegerCoefficient is thrown otherwise.
HomPoly shadow_enumerator(const HomPoly& a, std::size_t k);

/// Inverse direction 2^{-k} S(x-iy, x+iy); reproduces A for valid shadows.
HomPoly shadow_inverse(const HomPoly& s, std::size_t k);

enum class DivisibilityFactor { x_plus_y, x2_plus_y2 };

/// Largest m with factor^m dividing a exactly (0 when a is not divisible).
int divisibility_order(const HomPoly& a, DivisibilityFactor factor);

/// QQR enumerator from the corresponding QR enumerator for p == 7 (mod 8):
/// (A_Q(x,y)^2 + A_Q(x,-y)^2) / 2.
HomPoly qqr_from_qr(const HomPoly& a_q);

}  // namespace qqr
