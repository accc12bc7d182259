#include "qqr/bitvec.hpp"

#include <algorithm>
#include <bit>

namespace qqr {

BitVector BitVector::from_string(std::string_view bits) {
    BitVector v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1')
            v.set(i);
        else if (bits[i] != '0')
            throw ParseError("BitVector::from_string: expected '0' or '1'");
    }
    return v;
}

BitVector BitVector::ones(std::size_t length) {
    BitVector v(length);
    for (auto& w : v.words_) w = ~std::uint64_t{0};
    if (length & 63) v.words_.back() &= (std::uint64_t{1} << (length & 63)) - 1;
    return v;
}

std::size_t BitVector::weight() const {
    std::size_t w = 0;
    for (auto x : words_) w += static_cast<std::size_t>(std::popcount(x));
    return w;
}

bool BitVector::any() const {
    return std::any_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w != 0; });
}

BitVector& BitVector::operator^=(const BitVector& o) {
    if (len_ != o.len_) throw LengthMismatch("BitVector xor: lengths differ");
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
    return *this;
}

BitVector& BitVector::operator&=(const BitVector& o) {
    if (len_ != o.len_) throw LengthMismatch("BitVector and: lengths differ");
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
}

bool BitVector::dot(const BitVector& o) const {
    if (len_ != o.len_) throw LengthMismatch("BitVector dot: lengths differ");
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) acc ^= words_[i] & o.words_[i];
    return std::popcount(acc) & 1;
}

BitVector BitVector::rotated(std::size_t shift) const {
    BitVector out(len_);
    if (len_ == 0) return out;
    shift %= len_;
    for (std::size_t i = 0; i < len_; ++i)
        if (get(i)) out.set((i + shift) % len_);
    return out;
}

BitVector BitVector::permuted(std::span<const int> perm) const {
    if (perm.size() != len_) throw LengthMismatch("BitVector::permuted: permutation size differs");
    BitVector out(len_);
    for (std::size_t i = 0; i < len_; ++i)
        if (get(i)) out.set(static_cast<std::size_t>(perm[i]));
    return out;
}

BitVector BitVector::concat(const BitVector& o) const {
    BitVector out(len_ + o.len_);
    for (std::size_t i = 0; i < len_; ++i)
        if (get(i)) out.set(i);
    for (std::size_t i = 0; i < o.len_; ++i)
        if (o.get(i)) out.set(len_ + i);
    return out;
}

std::string BitVector::to_string() const {
    std::string s(len_, '0');
    for (std::size_t i = 0; i < len_; ++i)
        if (get(i)) s[i] = '1';
    return s;
}

BitMatrix::BitMatrix(std::vector<BitVector> rows) : rows_(std::move(rows)) {
    if (!rows_.empty()) {
        cols_ = rows_[0].length();
        for (const auto& r : rows_)
            if (r.length() != cols_) throw LengthMismatch("BitMatrix: ragged rows");
    }
}

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i);
    return m;
}

BitMatrix BitMatrix::from_strings(std::initializer_list<std::string_view> rows) {
    std::vector<BitVector> rs;
    rs.reserve(rows.size());
    for (auto s : rows) rs.push_back(BitVector::from_string(s));
    return BitMatrix(std::move(rs));
}

void BitMatrix::append_row(BitVector r) {
    if (rows_.empty())
        cols_ = r.length();
    else if (r.length() != cols_)
        throw LengthMismatch("BitMatrix::append_row: column count differs");
    rows_.push_back(std::move(r));
}

RrefResult rref(const BitMatrix& m) {
    RrefResult res;
    std::vector<BitVector> rows;
    rows.reserve(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));

    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < m.cols() && pivot_row < rows.size(); ++col) {
        std::size_t sel = pivot_row;
        while (sel < rows.size() && !rows[sel].get(col)) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[pivot_row], rows[sel]);
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (r != pivot_row && rows[r].get(col)) rows[r] ^= rows[pivot_row];
        res.pivot_columns.push_back(col);
        ++pivot_row;
    }
    res.rank = pivot_row;
    res.matrix = BitMatrix(std::move(rows));  // zero rows end up at the bottom
    return res;
}

}  // namespace qqr
