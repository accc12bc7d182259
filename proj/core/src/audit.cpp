#include "qqr/audit.hpp"

#include <sstream>

#include "qqr/hompoly.hpp"

namespace qqr {

AuditReport audit_table(const WeightTableFile& t) {
    if (!t.complete()) throw IncompleteTable("audit_table: table must cover every j in 0..p");
    AuditReport rep;

    // 1. divisibility by p away from A_0 and A_p
    {
        CheckResult& c = rep.checks[0];
        c.name = "divisible-by-p";
        std::ostringstream bad;
        int nbad = 0;
        for (const auto& [j, v] : t.records) {
            if (j == 0 || j == t.p) continue;
            if (v % t.p != 0) {
                if (nbad < 8) bad << ' ' << j;
                ++nbad;
            }
        }
        c.pass = nbad == 0;
        c.witness = c.pass ? "all interior A_i divisible by p"
                           : "A_i not divisible by p at i =" + bad.str() +
                                 (nbad > 8 ? " ... (" + std::to_string(nbad) + " total)" : "");
    }

    // 2. sum = 2^k
    {
        CheckResult& c = rep.checks[1];
        c.name = "sum-2^k";
        mpz_class sum = 0;
        for (const auto& [j, v] : t.records) sum += v;
        mpz_class expect = 1;
        expect <<= t.k;
        c.pass = sum == expect;
        std::ostringstream os;
        os << "sum = " << sum << (c.pass ? " = 2^k" : " != 2^k = ") << (c.pass ? "" : expect.get_str());
        c.witness = os.str();
    }

    const HomPoly a = HomPoly::from_counts(t.to_distribution().counts);

    // 3. (x+y)^d divisibility
    {
        CheckResult& c = rep.checks[2];
        c.name = "divisible-by-(x+y)^d";
        const int order = divisibility_order(a, DivisibilityFactor::x_plus_y);
        c.pass = order >= t.d;
        c.witness = "order " + std::to_string(order) + " vs claimed d " + std::to_string(t.d);
    }

    // 4. extended-code MacWilliams identity
    {
        CheckResult& c = rep.checks[3];
        c.name = "extended-macwilliams";
        const std::size_t n = a.degree();
        const HomPoly alt = a.negate_y();
        const mpq_class half(1, 2);
        const HomPoly even = (a + alt) * GaussianRational(half);
        const HomPoly odd = (a - alt) * GaussianRational(half);
        HomPoly f(n + 1);
        for (std::size_t j = 0; j <= n; ++j) {
            f.coeff(j) += even.coeff(j);       // x * even part keeps the y-power
            f.coeff(j + 1) += odd.coeff(j);    // y * odd part raises it
        }
        const HomPoly mw = macwilliams(f, static_cast<std::size_t>(t.k));
        c.pass = (mw == f);
        if (c.pass) {
            c.witness = "f(x,y) = 2^-k f(x+y,x-y) exactly";
        } else {
            std::size_t j = 0;
            while (j <= n + 1 && f.coeff(j) == mw.coeff(j)) ++j;
            c.witness = "first mismatch at y^" + std::to_string(j);
        }
    }

    rep.pass = true;
    for (const auto& c : rep.checks) rep.pass = rep.pass && c.pass;
    return rep;
}

}  // namespace qqr
