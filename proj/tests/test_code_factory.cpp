#include <random>

#include "doctest.h"
#include "qqr/code_factory.hpp"
#include "qqr/enumerator.hpp"

using namespace qqr;

TEST_CASE("quadratic residue split") {
    auto [q3, n3] = quadratic_residue_split(3);
    CHECK(q3 == std::vector<int>{1});
    CHECK(n3 == std::vector<int>{2});

    auto [q7, n7] = quadratic_residue_split(7);
    CHECK(q7 == std::vector<int>{1, 2, 4});
    CHECK(n7 == std::vector<int>{3, 5, 6});

    auto [q11, n11] = quadratic_residue_split(11);
    CHECK(q11 == std::vector<int>{1, 3, 4, 5, 9});
    CHECK(n11 == std::vector<int>{2, 6, 7, 8, 10});

    CHECK_THROWS_AS(quadratic_residue_split(9), NotPrime);
    CHECK_THROWS_AS(quadratic_residue_split(2), NotPrime);
}

TEST_CASE("primitive roots are minimal") {
    CHECK(PrimeParams::make(7).rho() == 3);
    CHECK(PrimeParams::make(11).rho() == 2);
    CHECK(PrimeParams::make(19).rho() == 2);
    CHECK(PrimeParams::make(23).rho() == 5);
}

TEST_CASE("family dimensions") {
    for (int p : {7, 11, 19, 23}) {
        auto pp = PrimeParams::make(p);
        CHECK(build(pp, CodeFamily::qqr).k() == static_cast<std::size_t>(p));
        CHECK(build(pp, CodeFamily::qqr).n() == static_cast<std::size_t>(2 * p));
        CHECK(build(pp, CodeFamily::c0).k() == static_cast<std::size_t>(p - 1));
        CHECK(build(pp, CodeFamily::c0_perp).k() == static_cast<std::size_t>(p + 1));
        auto ext = build(pp, CodeFamily::extended);
        CHECK(ext.n() == static_cast<std::size_t>(2 * p + 2));
        CHECK(ext.k() == static_cast<std::size_t>(p + 1));
        if (p % 8 == 7 || p % 8 == 1) {
            CHECK(build(pp, CodeFamily::qr_q).k() == static_cast<std::size_t>((p + 1) / 2));
            CHECK(build(pp, CodeFamily::expurgated_q).k() ==
                  static_cast<std::size_t>((p - 1) / 2));
        } else {
            CHECK_THROWS_AS((void)build(pp, CodeFamily::qr_q), WrongResidueClass);
            CHECK_THROWS_AS((void)build(pp, CodeFamily::expurgated_n), WrongResidueClass);
        }
    }
    // p == 1 (mod 8): QR families exist there too
    auto pp17 = PrimeParams::make(17);
    CHECK(build(pp17, CodeFamily::qr_q).k() == 9);
    CHECK(build(pp17, CodeFamily::expurgated_q).k() == 8);
    CHECK_THROWS_AS((void)build(pp17, CodeFamily::c0), WrongResidueClass);
}

TEST_CASE("(p=7, QR_Q) has Hamming parameters") {
    auto pp = PrimeParams::make(7);
    auto q = build(pp, CodeFamily::qr_q);
    CHECK(q.n() == 7);
    CHECK(q.k() == 4);
    CHECK(min_distance_brute(q) == 3);
}

TEST_CASE("(p=23, EXTENDED) is a [48,24] code") {
    auto pp = PrimeParams::make(23);
    auto ext = build(pp, CodeFamily::extended);
    CHECK(ext.n() == 48);
    CHECK(ext.k() == 24);
}

TEST_CASE("perron identity") {
    CHECK(perron_identity_check(PrimeParams::make(3)));
    CHECK(perron_identity_check(PrimeParams::make(11)));
    CHECK(perron_identity_check(PrimeParams::make(19)));
    CHECK_THROWS_AS((void)perron_identity_check(PrimeParams::make(7)), WrongResidueClass);
}

TEST_CASE("standard double circulant form") {
    CHECK(standard_form_check(PrimeParams::make(11)));
    CHECK(standard_form_check(PrimeParams::make(19)));
    CHECK(!standard_form_check(PrimeParams::make(7)));
    CHECK(!standard_form_check(PrimeParams::make(23)));
    CHECK_THROWS_AS((void)standard_form_check(PrimeParams::make(5)), WrongResidueClass);
}

TEST_CASE("even subcode relation, p=7") {
    auto rel = even_subcode_relation_check(PrimeParams::make(7));
    CHECK(rel.equal);
    CHECK(rel.d_qqr == 4);
    CHECK(rel.d_qr == 3);
    CHECK_THROWS_AS((void)even_subcode_relation_check(PrimeParams::make(11)), WrongResidueClass);
}

TEST_CASE("C0 is doubly even; QQR is singly even") {
    std::mt19937_64 rng(7);
    for (int p : {7, 11, 19}) {
        auto pp = PrimeParams::make(p);
        auto c0 = build(pp, CodeFamily::c0);
        for (std::size_t i = 0; i < c0.k(); ++i) CHECK(c0.generator().row(i).weight() % 4 == 0);
        // random codewords stay doubly even
        for (int t = 0; t < 64; ++t) {
            BitVector w(c0.n());
            for (std::size_t i = 0; i < c0.k(); ++i)
                if (rng() & 1) w ^= c0.generator().row(i);
            CHECK(w.weight() % 4 == 0);
        }
        // (r_Q, r_N) has weight p-1 == 2 (mod 4)
        CHECK((pp.r_q().concat(pp.r_n()).weight()) == static_cast<std::size_t>(p - 1));
        CHECK((p - 1) % 4 == 2);
    }
}

TEST_CASE("QQR is the even subcode of C0_perp") {
    for (int p : {7, 11, 19}) {
        auto pp = PrimeParams::make(p);
        CHECK(even_subcode(build(pp, CodeFamily::c0_perp)) == build(pp, CodeFamily::qqr));
    }
}

TEST_CASE("psl2 generator maps") {
    auto pp11 = PrimeParams::make(11);
    auto g11 = psl2_generators(pp11);
    // S wraps (left,10) to (left,0)
    CHECK(g11.s.map[10] == 0);
    // T sends (left,0) to (left,inf)
    CHECK(g11.t.map[0] == 11);
    CHECK(g11.t.map[11] == 0);

    auto pp7 = PrimeParams::make(7);
    auto g7 = psl2_generators(pp7);
    // rho = 3, V maps (right,2) -> (right, 2*9 mod 7 = 4): flat 8+2 -> 8+4
    CHECK(g7.v.map[8 + 2] == 8 + 4);
}

TEST_CASE("identity permutation fixes any code") {
    auto pp = PrimeParams::make(7);
    auto ext = build(pp, CodeFamily::extended);
    PermutationAction id;
    id.name = "identity";
    id.map.resize(ext.n());
    for (std::size_t i = 0; i < ext.n(); ++i) id.map[i] = static_cast<int>(i);
    CHECK(id.is_identity());
    CHECK(automorphism_check(ext, id));
    id.map.pop_back();
    CHECK_THROWS_AS((void)automorphism_check(ext, id), LengthMismatch);
}

TEST_CASE("PSL2(p) fixes the extended code, p=7 and p=11") {
    for (int p : {7, 11}) {
        auto pp = PrimeParams::make(p);
        auto ext = build(pp, CodeFamily::extended);
        auto gens = psl2_generators(pp);
        CHECK(automorphism_check(ext, gens.s));
        CHECK(automorphism_check(ext, gens.v));
        CHECK(automorphism_check(ext, gens.t));
    }
}

TEST_CASE("a transposition is not an automorphism of the extended code") {
    auto pp = PrimeParams::make(11);
    auto ext = build(pp, CodeFamily::extended);
    PermutationAction swap01;
    swap01.name = "swap01";
    swap01.map.resize(ext.n());
    for (std::size_t i = 0; i < ext.n(); ++i) swap01.map[i] = static_cast<int>(i);
    std::swap(swap01.map[0], swap01.map[1]);
    CHECK(!automorphism_check(ext, swap01));
}

TEST_CASE("position labels") {
    PositionLabel l{Half::right, 11};  // right infinity for p=11
    CHECK(l.flat(11) == 23);
    auto back = PositionLabel::from_flat(23, 11);
    CHECK(back.half == Half::right);
    CHECK(back.index == 11);
    CHECK(PositionLabel::from_flat(11, 11).half == Half::left);
    CHECK(PositionLabel::from_flat(11, 11).index == 11);
}
