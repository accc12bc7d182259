#include "qqr/code_factory.hpp"

#include <algorithm>

#include "qqr/errors.hpp"

namespace qqr {

namespace {

void require(bool ok, const char* what) {
    if (!ok) throw WrongResidueClass(what);
}

bool qr_in_range(int p) { return p % 8 == 1 || p % 8 == 7; }

// Rows x^i * r (i = 0..p-1): the circulant G_r.
std::vector<BitVector> circulant_rows(const BitVector& r) {
    std::vector<BitVector> rows;
    const std::size_t p = r.length();
    rows.reserve(p);
    for (std::size_t i = 0; i < p; ++i) rows.push_back(r.rotated(i));
    return rows;
}

// Cyclic code generated by r, with the all-ones word adjoined. For
// p == 7 (mod 8) the span of the shifts already contains it; for
// p == 1 (mod 8) the shifts alone span only the even (expurgated) subcode.
LinearCode qr_code(const BitVector& r) {
    auto rows = circulant_rows(r);
    rows.push_back(BitVector::ones(r.length()));
    return LinearCode(BitMatrix(std::move(rows)));
}

// Rows (x^i r_Q | x^i r_N): the double circulant [G_Q | G_N].
std::vector<BitVector> qqr_rows(const PrimeParams& pp) {
    std::vector<BitVector> rows;
    rows.reserve(pp.p());
    for (int i = 0; i < pp.p(); ++i)
        rows.push_back(pp.r_q().rotated(i).concat(pp.r_n().rotated(i)));
    return rows;
}

BitVector extend_with_parities(const BitVector& w, int p) {
    // (a | b) of length 2p -> (a, parity(a), b, parity(b)) of length 2p+2.
    BitVector out(2 * p + 2);
    std::size_t wl = 0, wr = 0;
    for (int i = 0; i < p; ++i) {
        if (w.get(i)) {
            out.set(i);
            ++wl;
        }
        if (w.get(p + i)) {
            out.set(p + 1 + i);
            ++wr;
        }
    }
    if (wl & 1) out.set(p);
    if (wr & 1) out.set(2 * p + 1);
    return out;
}

}  // namespace

const char* family_name(CodeFamily f) {
    switch (f) {
        case CodeFamily::qr_q: return "qr";
        case CodeFamily::qr_n: return "qr-n";
        case CodeFamily::expurgated_q: return "expurgated";
        case CodeFamily::expurgated_n: return "expurgated-n";
        case CodeFamily::qqr: return "qqr";
        case CodeFamily::qqr_std_form: return "qqr-std";
        case CodeFamily::c0: return "c0";
        case CodeFamily::c0_perp: return "c0-perp";
        case CodeFamily::extended: return "extended";
    }
    return "?";
}

CodeFamily family_from_name(const std::string& name) {
    for (CodeFamily f : {CodeFamily::qr_q, CodeFamily::qr_n, CodeFamily::expurgated_q,
                         CodeFamily::expurgated_n, CodeFamily::qqr, CodeFamily::qqr_std_form,
                         CodeFamily::c0, CodeFamily::c0_perp, CodeFamily::extended})
        if (name == family_name(f)) return f;
    throw ParseError("unknown code family: " + name);
}

LinearCode build(const PrimeParams& pp, CodeFamily family) {
    const int p = pp.p();
    switch (family) {
        case CodeFamily::qr_q:
            require(qr_in_range(p), "QR code requires p == +-1 (mod 8)");
            return qr_code(pp.r_q());
        case CodeFamily::qr_n:
            require(qr_in_range(p), "QR code requires p == +-1 (mod 8)");
            return qr_code(pp.r_n());
        case CodeFamily::expurgated_q:
            require(qr_in_range(p), "expurgated QR code requires p == +-1 (mod 8)");
            return even_subcode(qr_code(pp.r_q()));
        case CodeFamily::expurgated_n:
            require(qr_in_range(p), "expurgated QR code requires p == +-1 (mod 8)");
            return even_subcode(qr_code(pp.r_n()));
        case CodeFamily::qqr:
            return LinearCode(BitMatrix(qqr_rows(pp)));
        case CodeFamily::qqr_std_form: {
            require(p % 4 == 3, "[I|G_Q] form requires p == 3 (mod 4)");
            std::vector<BitVector> rows;
            rows.reserve(p);
            for (int i = 0; i < p; ++i) {
                BitVector e(p);
                e.set(i);
                rows.push_back(e.concat(pp.r_q().rotated(i)));
            }
            return LinearCode(BitMatrix(std::move(rows)));
        }
        case CodeFamily::c0: {
            require(p % 4 == 3, "C0 requires p == 3 (mod 4)");
            const BitVector ones = BitVector::ones(2 * p);
            auto rows = qqr_rows(pp);
            for (auto& r : rows) r ^= ones;  // 1 - e_i
            return LinearCode(BitMatrix(std::move(rows)));
        }
        case CodeFamily::c0_perp: {
            require(p % 4 == 3, "C0_perp requires p == 3 (mod 4)");
            auto rows = qqr_rows(pp);
            rows.push_back(BitVector::ones(p).concat(BitVector(p)));  // alpha
            return LinearCode(BitMatrix(std::move(rows)));
        }
        case CodeFamily::extended: {
            require(p % 4 == 3, "extended code requires p == 3 (mod 4)");
            auto rows = qqr_rows(pp);
            rows.push_back(BitVector::ones(p).concat(BitVector(p)));
            std::vector<BitVector> ext;
            ext.reserve(rows.size());
            for (const auto& r : rows) ext.push_back(extend_with_parities(r, p));
            return LinearCode(BitMatrix(std::move(ext)));
        }
    }
    throw Error("build: unknown family");
}

bool perron_identity_check(const PrimeParams& pp) {
    require(pp.p() % 8 == 3, "Perron identity requires p == 3 (mod 8)");
    BitVector one(pp.p());
    one.set(0);
    return cyclic_product(pp.r_q(), pp.r_q()) == pp.r_n() &&
           cyclic_product(pp.r_q(), pp.r_n()) == one;
}

bool standard_form_check(const PrimeParams& pp) {
    require(pp.p() % 4 == 3, "standard form check requires p == 3 (mod 4)");
    return build(pp, CodeFamily::qqr) == build(pp, CodeFamily::qqr_std_form);
}

EvenSubcodeRelation even_subcode_relation_check(const PrimeParams& pp, std::uint64_t budget) {
    require(pp.p() % 8 == 7, "even-subcode relation requires p == 7 (mod 8)");
    const LinearCode qqr = build(pp, CodeFamily::qqr);
    const LinearCode q = build(pp, CodeFamily::qr_q);
    const LinearCode n = build(pp, CodeFamily::qr_n);
    EvenSubcodeRelation rel;
    rel.equal = (qqr == even_subcode(direct_sum(q, n)));
    rel.d_qqr = static_cast<int>(min_distance_brute(qqr, budget));
    rel.d_qr = static_cast<int>(min_distance_brute(q, budget));
    return rel;
}

PositionLabel PositionLabel::from_flat(int pos, int p) {
    PositionLabel l;
    l.half = pos <= p ? Half::left : Half::right;
    l.index = l.half == Half::left ? pos : pos - (p + 1);
    return l;
}

bool PermutationAction::is_identity() const {
    for (std::size_t i = 0; i < map.size(); ++i)
        if (map[i] != static_cast<int>(i)) return false;
    return true;
}

Psl2Generators psl2_generators(const PrimeParams& pp) {
    const int p = pp.p();
    require(p % 4 == 3, "PSL2 generators require p == 3 (mod 4)");

    auto lift = [p](const char* name, auto&& f) {
        // f maps 0..p-1 to 0..p (p meaning infinity) and defines the image of
        // infinity; applied identically on both halves.
        PermutationAction a;
        a.name = name;
        a.map.assign(2 * p + 2, 0);
        for (int half = 0; half < 2; ++half) {
            const int base = half == 0 ? 0 : p + 1;
            for (int y = 0; y <= p; ++y) a.map[base + y] = base + f(y);
        }
        return a;
    };

    const int rho2 = static_cast<int>(static_cast<long long>(pp.rho()) * pp.rho() % p);
    Psl2Generators g;
    g.s = lift("S", [p](int y) { return y == p ? p : (y + 1) % p; });
    g.v = lift("V", [p, rho2](int y) {
        return y == p ? p : static_cast<int>(static_cast<long long>(rho2) * y % p);
    });
    g.t = lift("T", [p, &pp](int y) {
        if (y == p) return 0;       // inf -> 0
        if (y == 0) return p;       // 0 -> inf
        return (p - pp.inverse_mod_p(y)) % p;
    });
    return g;
}

bool automorphism_check(const LinearCode& c, const PermutationAction& perm) {
    if (perm.map.size() != c.n())
        throw LengthMismatch("automorphism_check: permutation domain != code length");
    const auto& g = c.generator();
    for (std::size_t i = 0; i < g.rows(); ++i)
        if (!c.contains(g.row(i).permuted(perm.map))) return false;
    return true;
}

}  // namespace qqr
