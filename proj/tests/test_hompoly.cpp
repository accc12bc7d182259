#include "doctest.h"
#include "qqr/code_factory.hpp"
#include "qqr/enumerator.hpp"
#include "qqr/hompoly.hpp"

using namespace qqr;

namespace {

HomPoly qqr_poly(int p) {
    return HomPoly::from_counts(weight_distribution(build(PrimeParams::make(p), CodeFamily::qqr)));
}

HomPoly qr_poly(int p) {
    return HomPoly::from_counts(weight_distribution(build(PrimeParams::make(p), CodeFamily::qr_q)));
}

}  // namespace

TEST_CASE("counts round trip") {
    std::vector<mpz_class> counts = {1, 0, 1};  // x^2 + y^2
    auto h = HomPoly::from_counts(counts);
    CHECK(h == HomPoly::gleason_g());
    CHECK(h.to_counts() == counts);

    auto q3 = qqr_poly(3);
    CHECK(q3.to_counts() == std::vector<mpz_class>{1, 0, 3, 0, 3, 0, 1});
    CHECK(q3 == HomPoly::gleason_g().pow(3));
}

TEST_CASE("to_counts rejects bad coefficients") {
    HomPoly h(1);
    h.coeff(0) = 1;
    h.coeff(1) = GaussianRational(mpq_class(-1));
    CHECK_THROWS_AS((void)h.to_counts(), NegativeCoefficient);
    h.coeff(1) = GaussianRational(mpq_class(1, 2));
    CHECK_THROWS_AS((void)h.to_counts(), NonIntegerCoefficient);
    h.coeff(1) = GaussianRational(mpq_class(0), mpq_class(1));
    CHECK_THROWS_AS((void)h.to_counts(), NonIntegerCoefficient);
}

TEST_CASE("macwilliams of the zero code is the full space") {
    const std::size_t n = 5;
    auto mw = macwilliams(HomPoly::x_power(n), 0);
    CHECK(mw == HomPoly::x_plus_y_power(n));
}

TEST_CASE("macwilliams fixes self-dual enumerators") {
    auto a = qqr_poly(11);
    CHECK(macwilliams(a, 11) == a);
}

TEST_CASE("macwilliams sends QR(7) to its expurgated code") {
    auto a = qr_poly(7);
    auto dual_counts = macwilliams(a, 4).to_counts();
    auto bar = weight_distribution(build(PrimeParams::make(7), CodeFamily::expurgated_q));
    CHECK(dual_counts == bar.counts);
}

TEST_CASE("macwilliams is an involution on self-dual enumerators") {
    for (int p : {3, 7, 11}) {
        auto a = qqr_poly(p);
        CHECK(macwilliams(macwilliams(a, static_cast<std::size_t>(p)), static_cast<std::size_t>(p)) == a);
    }
}

TEST_CASE("shadow of QQR(3) is 8 x^3 y^3") {
    auto s = shadow_enumerator(qqr_poly(3), 3);
    auto counts = s.to_counts();
    CHECK(counts == std::vector<mpz_class>{0, 0, 0, 8, 0, 0, 0});
}

TEST_CASE("shadow of a doubly-even self-dual code equals its macwilliams transform") {
    // extended Hamming [8,4]: x^8 + 14 x^4 y^4 + y^8
    std::vector<mpz_class> counts = {1, 0, 0, 0, 14, 0, 0, 0, 1};
    auto a = HomPoly::from_counts(counts);
    CHECK(shadow_enumerator(a, 4) == macwilliams(a, 4));
    CHECK(shadow_enumerator(a, 4) == a);
}

TEST_CASE("shadow support and inverse identity") {
    const std::vector<std::pair<int, int>> cases = {{3, 2}, {11, 6}, {19, 8}};
    for (auto [p, d] : cases) {
        auto a = qqr_poly(p);
        auto s = shadow_enumerator(a, static_cast<std::size_t>(p));
        auto counts = s.to_counts();  // nonnegative integers or it would throw
        int min_wt = -1;
        mpz_class total = 0;
        for (std::size_t j = 0; j < counts.size(); ++j) {
            total += counts[j];
            if (min_wt < 0 && counts[j] != 0) min_wt = static_cast<int>(j);
        }
        CHECK(min_wt >= d - 1);
        mpz_class shadow_size = 1;
        shadow_size <<= p;  // |C0^perp| - |C^perp| = 2^{p+1} - 2^p
        CHECK(total == shadow_size);
        // A = 2^{-k} S(x - iy, x + iy)
        CHECK(shadow_inverse(s, static_cast<std::size_t>(p)) == a);
    }
}

TEST_CASE("shadow of a non-self-orthogonal enumerator is rejected") {
    // {00, 10}: A = x^2 + xy
    std::vector<mpz_class> counts = {1, 1, 0};
    CHECK_THROWS_AS((void)shadow_enumerator(HomPoly::from_counts(counts), 1), NonIntegerCoefficient);
}

TEST_CASE("divisibility orders") {
    CHECK(divisibility_order(qqr_poly(3), DivisibilityFactor::x2_plus_y2) == 3);
    CHECK(divisibility_order(qqr_poly(11), DivisibilityFactor::x2_plus_y2) == 7);
    CHECK(divisibility_order(qqr_poly(19), DivisibilityFactor::x2_plus_y2) == 7);
    CHECK(divisibility_order(qqr_poly(11), DivisibilityFactor::x_plus_y) == 0);
    CHECK(divisibility_order(qr_poly(7), DivisibilityFactor::x_plus_y) == 3);
    CHECK(divisibility_order(qr_poly(23), DivisibilityFactor::x_plus_y) == 7);
    // order 0 is allowed, not an error
    std::vector<mpz_class> counts = {1, 0, 1, 1};
    CHECK(divisibility_order(HomPoly::from_counts(counts), DivisibilityFactor::x_plus_y) == 0);
}

TEST_CASE("QQR enumerator from QR enumerator (p=7)") {
    CHECK(qqr_from_qr(qr_poly(7)) == qqr_poly(7));
}

TEST_CASE("qqr_from_qr degenerate input") {
    auto out = qqr_from_qr(HomPoly::x_power(7));
    CHECK(out == HomPoly::x_power(14));
}

TEST_CASE("QR enumerator splits over the expurgated code") {
    for (int p : {7, 23}) {
        auto a = qr_poly(p);
        auto bar = HomPoly::from_counts(
            weight_distribution(build(PrimeParams::make(p), CodeFamily::expurgated_q)));
        CHECK(a == bar + bar.swap_xy());
    }
}
