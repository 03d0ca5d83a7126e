#pragma once

// Dense exact linear algebra over a cyclotomic field. Everything here is
// plain Gaussian elimination; matrices stay small (sector dimensions), so
// no pivoting heuristics beyond "first nonzero" are needed.

#include <optional>
#include <vector>

#include "cyclotomic.hpp"

namespace hhalg {

using Row = std::vector<CycNum>;
using Matrix = std::vector<Row>;

// reduced row echelon form in place; returns the pivot column of each row
inline std::vector<int> rref(Matrix& A, const FieldPtr& F) {
    std::vector<int> pivots;
    if (A.empty()) return pivots;
    size_t rows = A.size(), cols = A[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t sel = r;
        while (sel < rows && A[sel][c].is_zero()) ++sel;
        if (sel == rows) continue;
        std::swap(A[r], A[sel]);
        CycNum inv = A[r][c].inverse();
        for (size_t j = c; j < cols; ++j) A[r][j] = A[r][j] * inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || A[i][c].is_zero()) continue;
            CycNum f = A[i][c];
            for (size_t j = c; j < cols; ++j) A[i][j] = A[i][j] - f * A[r][j];
        }
        pivots.push_back(static_cast<int>(c));
        ++r;
    }
    (void)F;
    return pivots;
}

// one exact solution of A x = b, if any
inline std::optional<Row> solve(Matrix A, Row b, const FieldPtr& F) {
    size_t rows = A.size();
    size_t cols = rows ? A[0].size() : 0;
    for (size_t i = 0; i < rows; ++i) A[i].push_back(b[i]);
    std::vector<int> piv = rref(A, F);
    CycNum zero = CycNum::rational(F, 0);
    Row x(cols, zero);
    for (size_t i = 0; i < piv.size(); ++i) {
        if (piv[i] == static_cast<int>(cols)) return std::nullopt;  // 0 = 1 row
        x[piv[i]] = A[i][cols];
    }
    return x;
}

// basis of the right nullspace of A
inline std::vector<Row> nullspace(Matrix A, size_t cols, const FieldPtr& F) {
    std::vector<int> piv = rref(A, F);
    std::vector<bool> is_pivot(cols, false);
    for (int c : piv) is_pivot[c] = true;
    CycNum zero = CycNum::rational(F, 0), one = CycNum::rational(F, 1);
    std::vector<Row> basis;
    for (size_t fc = 0; fc < cols; ++fc) {
        if (is_pivot[fc]) continue;
        Row v(cols, zero);
        v[fc] = one;
        for (size_t i = 0; i < piv.size(); ++i)
            v[piv[i]] = -A[i][fc];
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace hhalg
