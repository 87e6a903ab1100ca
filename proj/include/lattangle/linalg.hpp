#pragma once

// Exact linear algebra over the rationals: Gaussian elimination based
// rank / solve / nullspace. Small dense systems only.

#include <optional>
#include <vector>

#include "lattangle/rational.hpp"

namespace lattangle {

using QVec = std::vector<Rational>;
using QMat = std::vector<QVec>;  // row-major

/// Reduce `m` in place to reduced row echelon form; returns the pivot columns.
inline std::vector<size_t> rref(QMat& m) {
    std::vector<size_t> pivots;
    if (m.empty()) return pivots;
    const size_t rows = m.size(), cols = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[r], m[p]);
        Rational inv = 1 / m[r][c];
        for (size_t j = c; j < cols; ++j) m[r][j] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rational f = m[i][c];
            for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

inline size_t rank(QMat m) { return rref(m).size(); }

/// Solve A x = b; returns one solution or nullopt if inconsistent.
inline std::optional<QVec> solve(const QMat& a, const QVec& b) {
    if (a.empty()) {
        for (const auto& v : b)
            if (v != 0) return std::nullopt;
        return QVec{};
    }
    const size_t rows = a.size(), cols = a[0].size();
    QMat aug(rows, QVec(cols + 1));
    for (size_t i = 0; i < rows; ++i) {
        for (size_t j = 0; j < cols; ++j) aug[i][j] = a[i][j];
        aug[i][cols] = b[i];
    }
    auto pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == cols) return std::nullopt;  // 0 = 1 row
    QVec x(cols, Rational(0));
    for (size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug[i][cols];
    return x;
}

/// Basis of the right nullspace of A (columns = unknowns).
inline std::vector<QVec> nullspace(QMat a, size_t cols) {
    if (a.empty()) {
        std::vector<QVec> basis;
        for (size_t j = 0; j < cols; ++j) {
            QVec e(cols, Rational(0));
            e[j] = 1;
            basis.push_back(e);
        }
        return basis;
    }
    auto pivots = rref(a);
    std::vector<bool> is_pivot(cols, false);
    for (size_t c : pivots) is_pivot[c] = true;
    std::vector<QVec> basis;
    for (size_t free_c = 0; free_c < cols; ++free_c) {
        if (is_pivot[free_c]) continue;
        QVec v(cols, Rational(0));
        v[free_c] = 1;
        for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -a[i][free_c];
        basis.push_back(v);
    }
    return basis;
}

}  // namespace lattangle
