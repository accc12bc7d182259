#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <vector>

namespace qqr::detail {

struct SolveResult {
    enum class Status { unique, underdetermined, inconsistent };
    Status status = Status::underdetermined;
    std::vector<mpq_class> solution;
};

// Exact Gaussian elimination on an augmented (rows x cols | rhs) system.
// Any number of rows; unique solutions require rank == cols and a consistent
// tail.
inline SolveResult solve_exact(std::vector<std::vector<mpq_class>> m, std::vector<mpq_class> b) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    std::vector<std::size_t> pivot_of_col(cols, SIZE_MAX);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t sel = rank;
        while (sel < rows && m[sel][col] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(m[rank], m[sel]);
        std::swap(b[rank], b[sel]);
        const mpq_class inv = 1 / m[rank][col];
        for (auto& x : m[rank]) x *= inv;
        b[rank] *= inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || m[r][col] == 0) continue;
            const mpq_class f = m[r][col];
            for (std::size_t c = col; c < cols; ++c) m[r][c] -= f * m[rank][c];
            b[r] -= f * b[rank];
        }
        pivot_of_col[col] = rank;
        ++rank;
    }
    SolveResult res;
    for (std::size_t r = rank; r < rows; ++r)
        if (b[r] != 0) {
            res.status = SolveResult::Status::inconsistent;
            return res;
        }
    if (rank < cols) {
        res.status = SolveResult::Status::underdetermined;
        return res;
    }
    res.status = SolveResult::Status::unique;
    res.solution.resize(cols);
    for (std::size_t col = 0; col < cols; ++col) res.solution[col] = b[pivot_of_col[col]];
    return res;
}

}  // namespace qqr::detail
