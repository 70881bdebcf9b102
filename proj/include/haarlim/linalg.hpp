// Exact Gaussian elimination on rational matrices: rank, solving, null spaces.
// Dimensions here are tiny (rank of the groups involved), so no pivoting
// strategy beyond "first nonzero" is needed.
#pragma once

#include <optional>

#include "haarlim/rational.hpp"

namespace haarlim {

/// Reduced row echelon form in place. Returns the pivot column indices.
inline std::vector<int> rref(RatMat& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    const int rows = static_cast<int>(m.size());
    const int cols = static_cast<int>(m[0].size());
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pr = -1;
        for (int i = r; i < rows; ++i)
            if (m[i][c] != 0) { pr = i; break; }
        if (pr < 0) continue;
        std::swap(m[r], m[pr]);
        Rat pv = m[r][c];
        for (auto& x : m[r]) x /= pv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rat f = m[i][c];
            for (int j = 0; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

inline int rank(RatMat m) { return static_cast<int>(rref(m).size()); }

/// Affine rank minus one: the dimension of the affine hull of a point set.
inline int affine_dim(const std::vector<RatVec>& pts) {
    if (pts.empty()) return -1;
    RatMat diffs;
    for (std::size_t i = 1; i < pts.size(); ++i) diffs.push_back(vsub(pts[i], pts[0]));
    return diffs.empty() ? 0 : rank(std::move(diffs));
}

/// One exact solution of A x = b (free variables set to zero), or nullopt if
/// the system is inconsistent.
inline std::optional<RatVec> solve(const RatMat& a, const RatVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("solve: shape mismatch");
    if (a.empty()) return RatVec{};
    const int cols = static_cast<int>(a[0].size());
    RatMat aug(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        aug[i] = a[i];
        aug[i].push_back(b[i]);
    }
    std::vector<int> pivots = rref(aug);
    for (std::size_t i = 0; i < aug.size(); ++i) {
        bool zero_row = true;
        for (int j = 0; j < cols; ++j)
            if (aug[i][j] != 0) { zero_row = false; break; }
        if (zero_row && aug[i][cols] != 0) return std::nullopt;
    }
    RatVec x(cols, Rat(0));
    for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = aug[k][cols];
    return x;
}

/// Basis of the right null space {x : A x = 0}.
inline RatMat null_space(RatMat a) {
    if (a.empty()) return {};
    const int cols = static_cast<int>(a[0].size());
    std::vector<int> pivots = rref(a);
    std::vector<bool> is_pivot(cols, false);
    for (int p : pivots) is_pivot[p] = true;
    RatMat basis;
    for (int c = 0; c < cols; ++c) {
        if (is_pivot[c]) continue;
        RatVec v(cols, Rat(0));
        v[c] = 1;
        for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -a[k][c];
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Exact inverse of a square nonsingular matrix, or nullopt when singular.
inline std::optional<RatMat> inverse(const RatMat& a) {
    const int n = static_cast<int>(a.size());
    RatMat aug(n);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(a[i].size()) != n) throw std::invalid_argument("inverse: not square");
        aug[i] = a[i];
        for (int j = 0; j < n; ++j) aug[i].push_back(i == j ? Rat(1) : Rat(0));
    }
    std::vector<int> pivots = rref(aug);
    if (static_cast<int>(pivots.size()) != n) return std::nullopt;
    RatMat inv(n, RatVec(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
    return inv;
}

}  // namespace haarlim
