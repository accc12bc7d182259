#include "qqr/hompoly.hpp"

#include <sstream>

namespace qqr {

std::string GaussianRational::str() const {
    std::ostringstream os;
    if (im == 0) {
        os << re;
    } else {
        os << "(" << re << (im > 0 ? "+" : "-") << abs(im) << "i)";
    }
    return os.str();
}

HomPoly::HomPoly(std::size_t degree, std::vector<GaussianRational> coeff)
    : coeff_(std::move(coeff)) {
    if (coeff_.size() != degree + 1) throw LengthMismatch("HomPoly: coefficient count != degree+1");
}

HomPoly HomPoly::from_counts(const WeightDistribution& w) { return from_counts(w.counts); }

HomPoly HomPoly::from_counts(const std::vector<mpz_class>& counts) {
    if (counts.empty()) throw LengthMismatch("HomPoly::from_counts: empty counts");
    HomPoly h(counts.size() - 1);
    for (std::size_t j = 0; j < counts.size(); ++j) h.coeff_[j] = mpq_class(counts[j]);
    return h;
}

HomPoly HomPoly::x_power(std::size_t degree) {
    HomPoly h(degree);
    h.coeff_[0] = 1;
    return h;
}

HomPoly HomPoly::x_plus_y_power(std::size_t degree) {
    HomPoly h(degree);
    mpz_class b;
    for (std::size_t j = 0; j <= degree; ++j) {
        mpz_bin_uiui(b.get_mpz_t(), degree, j);
        h.coeff_[j] = mpq_class(b);
    }
    return h;
}

HomPoly HomPoly::gleason_g() {
    HomPoly g(2);
    g.coeff_[0] = 1;
    g.coeff_[2] = 1;
    return g;
}

HomPoly HomPoly::gleason_j() {
    // x^2 y^2 (x^2 - y^2)^2 = x^6 y^2 - 2 x^4 y^4 + x^2 y^6
    HomPoly j(8);
    j.coeff_[2] = 1;
    j.coeff_[4] = mpq_class(-2);
    j.coeff_[6] = 1;
    return j;
}

bool HomPoly::is_zero() const {
    for (const auto& c : coeff_)
        if (!c.is_zero()) return false;
    return true;
}

std::vector<mpz_class> HomPoly::to_counts() const {
    std::vector<mpz_class> out(coeff_.size());
    for (std::size_t j = 0; j < coeff_.size(); ++j) {
        const auto& c = coeff_[j];
        if (!c.is_integer())
            throw NonIntegerCoefficient("to_counts: coefficient of y^" + std::to_string(j) +
                                        " is " + c.str());
        if (c.re < 0)
            throw NegativeCoefficient("to_counts: coefficient of y^" + std::to_string(j) + " is " +
                                      c.str());
        out[j] = c.re.get_num();
    }
    return out;
}

HomPoly HomPoly::substitute(const GaussianRational& ax, const GaussianRational& bx,
                            const GaussianRational& ay, const GaussianRational& by) const {
    const std::size_t n = degree();
    HomPoly out(n);
    mpz_class b;

    // (ax*x + bx*y)^m expanded once per needed power, reused via caching of
    // the two power tables.
    std::vector<GaussianRational> pow_ax(n + 1), pow_bx(n + 1), pow_ay(n + 1), pow_by(n + 1);
    pow_ax[0] = pow_bx[0] = pow_ay[0] = pow_by[0] = 1;
    for (std::size_t i = 1; i <= n; ++i) {
        pow_ax[i] = pow_ax[i - 1] * ax;
        pow_bx[i] = pow_bx[i - 1] * bx;
        pow_ay[i] = pow_ay[i - 1] * ay;
        pow_by[i] = pow_by[i - 1] * by;
    }

    std::vector<GaussianRational> first, second, prod;
    for (std::size_t j = 0; j <= n; ++j) {
        if (coeff_[j].is_zero()) continue;
        const std::size_t dx = n - j;  // exponent of the first factor
        first.assign(dx + 1, GaussianRational());
        for (std::size_t u = 0; u <= dx; ++u) {
            mpz_bin_uiui(b.get_mpz_t(), dx, u);
            first[u] = pow_ax[dx - u] * pow_bx[u] * GaussianRational(mpq_class(b));
        }
        second.assign(j + 1, GaussianRational());
        for (std::size_t v = 0; v <= j; ++v) {
            mpz_bin_uiui(b.get_mpz_t(), j, v);
            second[v] = pow_ay[j - v] * pow_by[v] * GaussianRational(mpq_class(b));
        }
        prod.assign(n + 1, GaussianRational());
        for (std::size_t u = 0; u <= dx; ++u) {
            if (first[u].is_zero()) continue;
            for (std::size_t v = 0; v <= j; ++v) prod[u + v] += first[u] * second[v];
        }
        for (std::size_t m = 0; m <= n; ++m) out.coeff_[m] += coeff_[j] * prod[m];
    }
    return out;
}

HomPoly HomPoly::negate_y() const {
    HomPoly out = *this;
    for (std::size_t j = 1; j < out.coeff_.size(); j += 2) out.coeff_[j] = -out.coeff_[j];
    return out;
}

HomPoly HomPoly::swap_xy() const {
    HomPoly out = *this;
    std::reverse(out.coeff_.begin(), out.coeff_.end());
    return out;
}

HomPoly& HomPoly::operator+=(const HomPoly& o) {
    if (degree() != o.degree()) throw LengthMismatch("HomPoly +: degrees differ");
    for (std::size_t j = 0; j < coeff_.size(); ++j) coeff_[j] += o.coeff_[j];
    return *this;
}

HomPoly& HomPoly::operator-=(const HomPoly& o) {
    if (degree() != o.degree()) throw LengthMismatch("HomPoly -: degrees differ");
    for (std::size_t j = 0; j < coeff_.size(); ++j) coeff_[j] -= o.coeff_[j];
    return *this;
}

HomPoly HomPoly::operator*(const HomPoly& o) const {
    HomPoly out(degree() + o.degree());
    for (std::size_t i = 0; i < coeff_.size(); ++i) {
        if (coeff_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.coeff_.size(); ++j) {
            if (o.coeff_[j].is_zero()) continue;
            out.coeff_[i + j] += coeff_[i] * o.coeff_[j];
        }
    }
    return out;
}

HomPoly HomPoly::operator*(const GaussianRational& s) const {
    HomPoly out = *this;
    for (auto& c : out.coeff_) c *= s;
    return out;
}

HomPoly HomPoly::pow(std::size_t e) const {
    HomPoly acc = HomPoly::x_power(0);  // the constant 1
    HomPoly base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        if (e >>= 1) base = base * base;
    }
    return acc;
}

HomPoly macwilliams(const HomPoly& a, std::size_t k) {
    GaussianRational one(1), minus_one(-1L);
    HomPoly out = a.substitute(one, one, one, minus_one);
    mpq_class scale(1);
    scale >>= k;  // 2^{-k}
    return out * GaussianRational(scale);
}

HomPoly shadow_enumerator(const HomPoly& a, std::size_t k) {
    GaussianRational one(1), i = GaussianRational::i();
    HomPoly out = a.substitute(one, one, i, -i);
    mpq_class scale(1);
    scale >>= k;
    out = out * GaussianRational(scale);
    for (std::size_t j = 0; j <= out.degree(); ++j)
        if (!out.coeff(j).is_integer() || out.coeff(j).re < 0)
            throw NonIntegerCoefficient(
                "shadow_enumerator: input is not a valid self-orthogonal enumerator (coefficient "
                "of y^" +
                std::to_string(j) + " is " + out.coeff(j).str() + ")");
    return out;
}

HomPoly shadow_inverse(const HomPoly& s, std::size_t k) {
    GaussianRational one(1), i = GaussianRational::i();
    HomPoly out = s.substitute(one, -i, one, i);
    mpq_class scale(1);
    scale >>= k;
    return out * GaussianRational(scale);
}

int divisibility_order(const HomPoly& a, DivisibilityFactor factor) {
    if (a.is_zero()) return 0;
    // Dehomogenize at x=1: divisibility by (x+y) resp. (x^2+y^2) becomes
    // exact division by (1+t) resp. (1+t^2) in Q(i)[t].
    std::vector<GaussianRational> f(a.coeffs());
    const std::size_t step = factor == DivisibilityFactor::x_plus_y ? 1 : 2;
    int order = 0;
    for (;;) {
        if (f.size() <= step) break;
        // Synthetic division by (1 + t^step): process from the top.
        std::vector<GaussianRational> q(f.size() - step);
        std::vector<GaussianRational> r = f;
        for (std::size_t i = r.size(); i-- > step;) {
            const GaussianRational c = r[i];
            if (c.is_zero()) continue;
            q[i - step] = c;
            r[i] = GaussianRational();
            r[i - step] -= c;
        }
        bool exact = true;
        for (std::size_t i = 0; i < step; ++i)
            if (!r[i].is_zero()) exact = false;
        if (!exact) break;
        f = std::move(q);
        ++order;
    }
    return order;
}

HomPoly qqr_from_qr(const HomPoly& a_q) {
    const HomPoly sq = a_q * a_q;
    const HomPoly alt = sq.negate_y();
    mpq_class half(1, 2);
    return (sq + alt) * GaussianRational(half);
}

}  // namespace qqr
