#include "doctest.h"
#include "qqr/code_factory.hpp"
#include "qqr/enumerator.hpp"
#include "qqr/qr_solver.hpp"

using namespace qqr;

TEST_CASE("identity when d = 0 and everything is known") {
    // symmetric toy table of "counts" for length 7
    std::map<int, mpz_class> known;
    const std::vector<int> vals = {1, 2, 5, 9, 9, 5, 2, 1};
    for (int j = 0; j <= 7; ++j) known[j] = vals[static_cast<std::size_t>(j)];
    auto w = qr_reconstruct(7, 0, known);
    for (int j = 0; j <= 7; ++j) CHECK(w.counts[static_cast<std::size_t>(j)] == vals[static_cast<std::size_t>(j)]);
}

TEST_CASE("QR(7) from its minimum-weight count") {
    std::map<int, mpz_class> known = {{3, 7}};
    auto w = qr_reconstruct(7, 3, known);
    auto brute = weight_distribution(build(PrimeParams::make(7), CodeFamily::qr_q));
    CHECK(w.counts == brute.counts);
    CHECK(w.provenance == WeightDistribution::Provenance::reconstructed);
}

TEST_CASE("QR(23) round trip from partial counts") {
    // A_0, the zeros below d, A_7, A_8, A_11, plus symmetry and the forced
    // residue classes pin the whole Golay-parameter table.
    std::map<int, mpz_class> known = {{7, 253}, {8, 506}, {11, 1288}};
    auto w = qr_reconstruct(23, 7, known);
    auto brute = weight_distribution(build(PrimeParams::make(23), CodeFamily::qr_q));
    CHECK(w.counts == brute.counts);
}

TEST_CASE("QR(23) is already pinned by its structural zeros") {
    // d = 7 plus the forced residue classes and symmetry leave a full-rank
    // system even before any nonzero count is supplied.
    auto w = qr_reconstruct(23, 7, {});
    auto brute = weight_distribution(build(PrimeParams::make(23), CodeFamily::qr_q));
    CHECK(w.counts == brute.counts);
}

TEST_CASE("insufficient knowns are reported") {
    // p == 3 (mod 8) has no forced residue classes; d = 0 forces nothing.
    std::map<int, mpz_class> known = {{0, 1}};
    try {
        (void)qr_reconstruct(11, 0, known);
        FAIL("expected InsufficientKnowns");
    } catch (const InsufficientKnowns& e) {
        CHECK(std::string(e.what()).find("missing A_j") != std::string::npos);
    }
}

TEST_CASE("contradictory counts are rejected") {
    std::map<int, mpz_class> known = {{7, 253}, {8, 507}, {11, 1288}, {12, 1287}};
    // 8 and 12 = 23-11 clash with symmetry closure of 11 -> 12
    CHECK_THROWS_AS((void)qr_reconstruct(23, 7, known), InconsistentSystem);
}

TEST_CASE("corrupted count breaks exact divisibility") {
    std::map<int, mpz_class> known = {{7, 254}, {8, 506}, {11, 1288}};
    CHECK_THROWS_AS((void)qr_reconstruct(23, 7, known), InconsistentSystem);
}
