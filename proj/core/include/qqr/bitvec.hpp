#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qqr/errors.hpp"

namespace qqr {

/// Packed GF(2) vector. Bits beyond length() are kept zero.
class BitVector {
   public:
    BitVector() = default;
    explicit BitVector(std::size_t length) : len_(length), words_((length + 63) / 64, 0) {}

    /// "1011" reads left to right as positions 0,1,2,3.
    static BitVector from_string(std::string_view bits);

    static BitVector zeros(std::size_t length) { return BitVector(length); }
    static BitVector ones(std::size_t length);

    std::size_t length() const { return len_; }
    bool empty() const { return len_ == 0; }

    bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i, bool v = true) {
        const std::uint64_t m = std::uint64_t{1} << (i & 63);
        if (v)
            words_[i >> 6] |= m;
        else
            words_[i >> 6] &= ~m;
    }
    void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    std::size_t weight() const;
    bool any() const;

    BitVector& operator^=(const BitVector& o);
    friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
    BitVector& operator&=(const BitVector& o);

    /// GF(2) inner product.
    bool dot(const BitVector& o) const;

    /// Cyclic rotation: bit i moves to position (i + shift) mod length.
    BitVector rotated(std::size_t shift) const;

    /// out[perm[i]] = in[i]; perm must be a bijection on [0, length).
    BitVector permuted(std::span<const int> perm) const;

    /// Concatenation (this | o).
    BitVector concat(const BitVector& o) const;

    bool operator==(const BitVector&) const = default;

    std::span<const std::uint64_t> words() const { return words_; }
    std::string to_string() const;

   private:
    std::size_t len_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Row-major GF(2) matrix; every row has length cols().
class BitMatrix {
   public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitVector(cols)) {}
    explicit BitMatrix(std::vector<BitVector> rows);

    static BitMatrix identity(std::size_t n);
    static BitMatrix from_strings(std::initializer_list<std::string_view> rows);

    std::size_t rows() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }

    BitVector& row(std::size_t i) { return rows_[i]; }
    const BitVector& row(std::size_t i) const { return rows_[i]; }

    bool get(std::size_t r, std::size_t c) const { return rows_[r].get(c); }
    void set(std::size_t r, std::size_t c, bool v = true) { rows_[r].set(c, v); }

    void append_row(BitVector r);

    bool operator==(const BitMatrix&) const = default;

   private:
    std::size_t cols_ = 0;
    std::vector<BitVector> rows_;
};

struct RrefResult {
    BitMatrix matrix;
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_columns;
};

/// Reduced row-echelon form over GF(2). Row space is preserved; the output
/// is the unique RREF, so it doubles as a canonical form for row spaces.
RrefResult rref(const BitMatrix& m);

}  // namespace qqr
