#include "doctest.h"
#include "qqr/code_factory.hpp"
#include "qqr/linear_code.hpp"

using namespace qqr;

namespace {
LinearCode repetition2() { return LinearCode(BitMatrix::from_strings({"11"})); }
}  // namespace

TEST_CASE("canonical form equality") {
    auto a = LinearCode(BitMatrix::from_strings({"110", "011"}));
    auto b = LinearCode(BitMatrix::from_strings({"101", "011"}));  // same row space
    CHECK(a == b);
    CHECK(a.k() == 2);
    CHECK(a.n() == 3);
}

TEST_CASE("parity check orthogonality") {
    auto c = LinearCode(BitMatrix::from_strings({"11010", "00110"}));
    const auto& h = c.parity_check();
    CHECK(h.rows() == c.n() - c.k());
    for (std::size_t i = 0; i < c.k(); ++i)
        for (std::size_t j = 0; j < h.rows(); ++j)
            CHECK(c.generator().row(i).dot(h.row(j)) == false);
}

TEST_CASE("contains") {
    auto rep = repetition2();
    CHECK(rep.contains(BitVector::from_string("00")));
    CHECK(rep.contains(BitVector::from_string("11")));
    CHECK(!rep.contains(BitVector::from_string("10")));
    CHECK_THROWS_AS((void)rep.contains(BitVector::from_string("101")), LengthMismatch);
}

TEST_CASE("QQR(11) contains its defining row (r_Q, r_N)") {
    auto pp = PrimeParams::make(11);
    auto c = build(pp, CodeFamily::qqr);
    CHECK(c.contains(pp.r_q().concat(pp.r_n())));
}

TEST_CASE("dual involution and self-dual repetition") {
    auto rep = repetition2();
    CHECK(dual(rep) == rep);

    auto c = LinearCode(BitMatrix::from_strings({"11010", "00110"}));
    CHECK(dual(c).k() == 3);
    CHECK(dual(dual(c)) == c);
}

TEST_CASE("dual of QR(7) is the expurgated code") {
    auto pp = PrimeParams::make(7);
    CHECK(dual(build(pp, CodeFamily::qr_q)) == build(pp, CodeFamily::expurgated_q));
    CHECK(dual(build(pp, CodeFamily::qr_n)) == build(pp, CodeFamily::expurgated_n));
}

TEST_CASE("QQR codes are self-dual") {
    for (int p : {3, 7, 11, 19}) {
        auto pp = PrimeParams::make(p);
        auto c = build(pp, CodeFamily::qqr);
        CHECK(dual(c) == c);
        // generator * generator^T = 0
        for (std::size_t i = 0; i < c.k(); ++i)
            for (std::size_t j = 0; j < c.k(); ++j)
                CHECK(c.generator().row(i).dot(c.generator().row(j)) == false);
    }
}

TEST_CASE("even subcode") {
    auto rep = repetition2();  // already even
    CHECK(even_subcode(rep) == rep);

    auto pp = PrimeParams::make(7);
    auto q7 = build(pp, CodeFamily::qr_q);
    auto bar = even_subcode(q7);
    CHECK(bar.k() == 3);
    CHECK(bar == build(pp, CodeFamily::expurgated_q));

    // dimension drops exactly when an odd-weight word exists
    auto odd = LinearCode(BitMatrix::from_strings({"100", "010"}));
    CHECK(even_subcode(odd).k() == 1);
}

TEST_CASE("even subcode of Q(+)N is the QQR code, p=7") {
    auto pp = PrimeParams::make(7);
    auto sum = direct_sum(build(pp, CodeFamily::qr_q), build(pp, CodeFamily::qr_n));
    CHECK(sum.k() == 8);
    CHECK(even_subcode(sum) == build(pp, CodeFamily::qqr));
}

TEST_CASE("minimum distance brute force") {
    auto pp7 = PrimeParams::make(7);
    CHECK(min_distance_brute(build(pp7, CodeFamily::qr_q)) == 3);

    auto pp11 = PrimeParams::make(11);
    CHECK(min_distance_brute(build(pp11, CodeFamily::qqr)) == 6);

    auto pp19 = PrimeParams::make(19);
    CHECK(min_distance_brute(build(pp19, CodeFamily::qqr)) == 8);

    CHECK_THROWS_AS((void)min_distance_brute(build(pp19, CodeFamily::qqr), 1 << 10),
                    BudgetExceeded);
}
