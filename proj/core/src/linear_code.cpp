#include "qqr/linear_code.hpp"

#include <limits>

#include "qqr/gray.hpp"

namespace qqr {

namespace {

// Parity check from an RREF generator: one row per non-pivot column f, with
// h[f] = 1 and h[pivot_j] = G[j][f].
BitMatrix parity_check_of(const BitMatrix& gen, const std::vector<std::size_t>& pivots,
                          std::size_t n) {
    std::vector<bool> is_pivot(n, false);
    for (auto c : pivots) is_pivot[c] = true;
    BitMatrix h(0, n);
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        BitVector row(n);
        row.set(f);
        for (std::size_t j = 0; j < pivots.size(); ++j)
            if (gen.get(j, f)) row.set(pivots[j]);
        h.append_row(std::move(row));
    }
    if (h.rows() == 0) h = BitMatrix(0, n);
    return h;
}

}  // namespace

LinearCode::LinearCode(const BitMatrix& generators) : n_(generators.cols()) {
    auto r = rref(generators);
    BitMatrix g(0, n_);
    for (std::size_t i = 0; i < r.rank; ++i) g.append_row(r.matrix.row(i));
    if (r.rank == 0) g = BitMatrix(0, n_);
    generator_ = std::move(g);
    parity_check_ = parity_check_of(generator_, r.pivot_columns, n_);
}

bool LinearCode::contains(const BitVector& w) const {
    if (w.length() != n_) throw LengthMismatch("LinearCode::contains: word length != n");
    for (std::size_t i = 0; i < parity_check_.rows(); ++i)
        if (parity_check_.row(i).dot(w)) return false;
    return true;
}

LinearCode dual(const LinearCode& c) { return LinearCode(c.parity_check()); }

LinearCode even_subcode(const LinearCode& c) {
    // Weight parity is linear over GF(2); the even subcode is its kernel.
    const auto& g = c.generator();
    std::vector<std::size_t> odd;
    std::vector<BitVector> rows;
    for (std::size_t i = 0; i < g.rows(); ++i) {
        if (g.row(i).weight() & 1)
            odd.push_back(i);
        else
            rows.push_back(g.row(i));
    }
    if (odd.empty()) return c;
    for (std::size_t j = 1; j < odd.size(); ++j) rows.push_back(g.row(odd[0]) ^ g.row(odd[j]));
    if (rows.empty()) return LinearCode(BitMatrix(0, c.n()));
    return LinearCode(BitMatrix(std::move(rows)));
}

LinearCode direct_sum(const LinearCode& a, const LinearCode& b) {
    BitMatrix g(0, a.n() + b.n());
    for (std::size_t i = 0; i < a.k(); ++i) g.append_row(a.generator().row(i).concat(BitVector(b.n())));
    for (std::size_t i = 0; i < b.k(); ++i) g.append_row(BitVector(a.n()).concat(b.generator().row(i)));
    return LinearCode(g);
}

std::size_t min_distance_brute(const LinearCode& c, std::uint64_t budget) {
    if (c.k() >= 64 || (std::uint64_t{1} << c.k()) > budget)
        throw BudgetExceeded("min_distance_brute: 2^k exceeds enumeration budget");
    std::size_t best = std::numeric_limits<std::size_t>::max();
    detail::walk_weights(c.generator(), 0, std::uint64_t{1} << c.k(), [&](std::size_t w) {
        if (w != 0 && w < best) best = w;
    });
    return best;
}

}  // namespace qqr
