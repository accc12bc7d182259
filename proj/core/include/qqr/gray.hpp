#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "qqr/bitvec.hpp"

namespace qqr::detail {

/// Visits the codewords of `gen`'s row space for message indices
/// [begin, end) in binary-reflected Gray order and calls fn(weight) once per
/// codeword. Each step costs one row XOR plus one popcount; the walk can be
/// partitioned into disjoint index ranges whose visits are independent.
template <class Fn>
void walk_weights(const BitMatrix& gen, std::uint64_t begin, std::uint64_t end, Fn&& fn) {
    const std::size_t k = gen.rows();
    const std::size_t n = gen.cols();
    if (begin >= end) return;

    auto gray = [](std::uint64_t i) { return i ^ (i >> 1); };

    if (n <= 64) {
        std::vector<std::uint64_t> rows(k);
        for (std::size_t i = 0; i < k; ++i) rows[i] = gen.row(i).words()[0];
        std::uint64_t cw = 0;
        const std::uint64_t g0 = gray(begin);
        for (std::size_t i = 0; i < k; ++i)
            if ((g0 >> i) & 1) cw ^= rows[i];
        fn(static_cast<std::size_t>(std::popcount(cw)));
        for (std::uint64_t idx = begin + 1; idx < end; ++idx) {
            cw ^= rows[std::countr_zero(idx)];
            fn(static_cast<std::size_t>(std::popcount(cw)));
        }
        return;
    }

    const std::size_t W = (n + 63) / 64;
    std::vector<std::uint64_t> rows(k * W);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t w = 0; w < W; ++w) rows[i * W + w] = gen.row(i).words()[w];

    std::vector<std::uint64_t> cw(W, 0);
    const std::uint64_t g0 = gray(begin);
    for (std::size_t i = 0; i < k; ++i)
        if ((g0 >> i) & 1)
            for (std::size_t w = 0; w < W; ++w) cw[w] ^= rows[i * W + w];

    auto weight = [&] {
        std::size_t s = 0;
        for (std::size_t w = 0; w < W; ++w) s += static_cast<std::size_t>(std::popcount(cw[w]));
        return s;
    };
    fn(weight());
    for (std::uint64_t idx = begin + 1; idx < end; ++idx) {
        const std::size_t i = static_cast<std::size_t>(std::countr_zero(idx));
        for (std::size_t w = 0; w < W; ++w) cw[w] ^= rows[i * W + w];
        fn(weight());
    }
}

}  // namespace qqr::detail
