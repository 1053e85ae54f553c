#pragma once

// Internal exact integer linear algebra used by the root-system machinery.
// Everything here works over long long with fraction-free eliminations; no
// floating point is involved anywhere.

#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace aqcoh::detail {

using IMat = std::vector<std::vector<long long>>;
using IVec = std::vector<long long>;

// Determinant by fraction-free (Bareiss) elimination.
inline long long idet(IMat m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    long long prev = 1;
    long long sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t pivot = k;
            while (pivot < n && m[pivot][k] == 0) ++pivot;
            if (pivot == n) return 0;
            std::swap(m[k], m[pivot]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

// Solve M x = b exactly by Cramer's rule, requiring |det M| = 1 so the
// solution is integral.  Returns false when det is not ±1.
inline bool solve_unimodular(const IMat& m, const IVec& b, IVec& out) {
    const std::size_t n = m.size();
    const long long d = idet(m);
    if (d != 1 && d != -1) return false;
    out.assign(n, 0);
    for (std::size_t col = 0; col < n; ++col) {
        IMat mc = m;
        for (std::size_t row = 0; row < n; ++row) mc[row][col] = b[row];
        out[col] = idet(mc) / d;
    }
    return true;
}

// Rank of an integer matrix via fraction-free row elimination.
inline std::size_t irank(IMat m) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows == 0 ? 0 : m[0].size();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[rank], m[pivot]);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            if (m[i][c] == 0) continue;
            const long long g = std::gcd(m[i][c], m[rank][c]);
            const long long fi = m[rank][c] / g;
            const long long fr = m[i][c] / g;
            for (std::size_t j = c; j < cols; ++j) {
                m[i][j] = m[i][j] * fi - m[rank][j] * fr;
            }
        }
        ++rank;
    }
    return rank;
}

} // namespace aqcoh::detail
