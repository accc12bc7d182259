#include <random>

#include "doctest.h"
#include "qqr/code_factory.hpp"
#include "qqr/curve_lab.hpp"
#include "qqr/enumerator.hpp"

using namespace qqr;

namespace {

// Independent oracle: count solutions of y^2 = f_S(x) over all p^2 pairs.
int count_points_naive(const PrimeParams& pp, const SubsetS& s) {
    const int p = pp.p();
    int total = 0;
    for (int x = 0; x < p; ++x) {
        long long f = 1;
        for (int a = 0; a < p; ++a)
            if ((s.members >> a) & 1) f = f * ((x - a) % p + p) % p;
        for (int y = 0; y < p; ++y)
            if ((static_cast<long long>(y) * y - f) % p == 0) ++total;
    }
    return total;
}

}  // namespace

TEST_CASE("empty subset gives 2p points") {
    for (int p : {3, 11, 19}) {
        auto pp = PrimeParams::make(p);
        CHECK(count_affine_points(pp, {p, 0}) == 2 * p);
    }
}

TEST_CASE("single root gives p points") {
    auto pp = PrimeParams::make(11);
    CHECK(count_affine_points(pp, {11, 1}) == 11);  // S = {0}
}

TEST_CASE("matches the naive count and the congruence, p=11 S={0,1}") {
    auto pp = PrimeParams::make(11);
    SubsetS s{11, 0b11};
    const int fast = count_affine_points(pp, s);
    CHECK(fast == count_points_naive(pp, s));
    CHECK(fast == 10);
    CHECK(fast % 4 == 2);
}

TEST_CASE("fast counter agrees with the naive oracle on random subsets") {
    auto pp = PrimeParams::make(19);
    std::mt19937_64 rng(99);
    for (int t = 0; t < 40; ++t) {
        SubsetS s{19, rng() & ((1u << 19) - 1)};
        CHECK(count_affine_points(pp, s) == count_points_naive(pp, s));
    }
}

TEST_CASE("translation invariance") {
    auto pp = PrimeParams::make(19);
    std::mt19937_64 rng(7);
    for (int t = 0; t < 40; ++t) {
        const std::uint64_t members = rng() & ((1u << 19) - 1);
        std::uint64_t shifted = 0;
        for (int a = 0; a < 19; ++a)
            if ((members >> a) & 1) shifted |= std::uint64_t{1} << ((a + 1) % 19);
        CHECK(count_affine_points(pp, {19, members}) == count_affine_points(pp, {19, shifted}));
    }
}

TEST_CASE("weight match: empty subset") {
    auto pp = PrimeParams::make(11);
    CHECK(weight_match_check(pp, {11, 0}));
}

TEST_CASE("weight match: odd subset p=11") {
    auto pp = PrimeParams::make(11);
    CHECK(weight_match_check(pp, {11, 0b1110}));  // S = {1,2,3}
}

TEST_CASE("weight match: random subsets p=19") {
    auto pp = PrimeParams::make(19);
    std::mt19937_64 rng(2024);
    for (int t = 0; t < 100; ++t)
        CHECK(weight_match_check(pp, {19, rng() & ((1u << 19) - 1)}));
}

TEST_CASE("point distribution p=3") {
    auto b = point_distribution(PrimeParams::make(3));
    CHECK(b.total() == 4);
    CHECK(b.at(2) == 3);
    CHECK(b.at(6) == 1);
}

TEST_CASE("point distribution p=11 matches the diagram") {
    auto b = point_distribution(PrimeParams::make(11));
    CHECK(b.at(6) == 77);
    CHECK(b.at(10) == 616);
    CHECK(b.at(14) == 330);
    CHECK(b.at(22) == 1);
    CHECK(b.total() == 1024);
    for (const auto& [k, v] : b.counts) CHECK(k % 4 == 2);
}

TEST_CASE("point distribution respects budget and residue class") {
    CHECK_THROWS_AS((void)point_distribution(PrimeParams::make(23), 1 << 10), BudgetExceeded);
    CHECK_THROWS_AS((void)point_distribution(PrimeParams::make(13)), WrongResidueClass);
}

TEST_CASE("partition determinism") {
    auto pp = PrimeParams::make(11);
    auto b1 = point_distribution(pp, std::uint64_t{1} << 26, 1);
    auto b5 = point_distribution(pp, std::uint64_t{1} << 26, 5);
    CHECK(b1.counts == b5.counts);
}

TEST_CASE("interlacing, p=11 and p=19") {
    for (int p : {11, 19}) {
        auto pp = PrimeParams::make(p);
        auto a = weight_distribution(build(pp, CodeFamily::qqr));
        auto b = point_distribution(pp);
        CHECK(interlace_check(a, b));
    }
}

TEST_CASE("interlace rejects mismatched lengths") {
    auto a = weight_distribution(build(PrimeParams::make(11), CodeFamily::qqr));
    auto b = point_distribution(PrimeParams::make(19));
    CHECK_THROWS_AS((void)interlace_check(a, b), LengthMismatch);
}

TEST_CASE("congruence scan exhaustive p=11") {
    auto rep = congruence_scan(PrimeParams::make(11));
    CHECK(rep.checked == 2048);
    CHECK(rep.violations == 0);
    CHECK(!rep.first_violation);
}

TEST_CASE("congruence scan sampled p=19") {
    auto rep = congruence_scan(PrimeParams::make(19), 1000, 42);
    CHECK(rep.checked == 1000);
    CHECK(rep.violations == 0);
    // same seed, same outcome
    auto rep2 = congruence_scan(PrimeParams::make(19), 1000, 42);
    CHECK(rep2.violations == 0);
    CHECK(rep2.checked == rep.checked);
}
