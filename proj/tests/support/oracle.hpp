#pragma once

// Test-only helpers kept independent of the library's linear algebra: a plain
// dense Gaussian elimination for ranks and direct equation enumerators built
// straight from structure constants.

#include "cce/algebra.hpp"

#include <vector>

namespace oracle {

using cce::AlgebraSpec;
using cce::ModuleActionSpec;
using cce::Rat;

using DenseMat = std::vector<std::vector<Rat>>;

inline int dense_rank(DenseMat m) {
    int rows = static_cast<int>(m.size());
    if (rows == 0) return 0;
    int cols = static_cast<int>(m[0].size());
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int piv = -1;
        for (int r = rank; r < rows; ++r)
            if (m[r][c] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(m[rank], m[piv]);
        Rat inv = Rat(1) / m[rank][c];
        for (int j = c; j < cols; ++j) m[rank][j] *= inv;
        for (int r = 0; r < rows; ++r) {
            if (r == rank || m[r][c] == 0) continue;
            Rat f = m[r][c];
            for (int j = c; j < cols; ++j) m[r][j] -= f * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

inline Rat entry(const cce::SparseVec& v, int idx) {
    for (const auto& [c, w] : v)
        if (c == idx) return w;
    return Rat(0);
}

inline Rat w_act(const ModuleActionSpec& V, int i, int p, int q) {
    return entry(V.act(i, p), q);
}

// Solution-space dimension of the derivation equations, enumerated directly.
inline int derivations_dim(const ModuleActionSpec& V) {
    const AlgebraSpec& A = V.algebra;
    int nv = A.dim * V.dim;  // beta(a_i) = sum_t x[i*V.dim+t] v_t
    DenseMat rows;
    for (int a = 0; a < A.dim; ++a)
        for (int b = 0; b < A.dim; ++b)
            for (int t = 0; t < V.dim; ++t) {
                std::vector<Rat> row(nv, Rat(0));
                for (const auto& [m, w] : A.mul(a, b)) row[m * V.dim + t] += w;
                for (int s = 0; s < V.dim; ++s) {
                    row[b * V.dim + s] -= w_act(V, a, s, t);
                    row[a * V.dim + s] -= w_act(V, b, s, t);
                }
                rows.push_back(std::move(row));
            }
    return nv - dense_rank(rows);
}

// D-space equations beta(abc) = sum_cyc (a.beta(bc) - bc.beta(a)) over all
// ordered basis triples.
inline int d_space_dim(const ModuleActionSpec& V) {
    const AlgebraSpec& A = V.algebra;
    int nv = A.dim * V.dim;
    DenseMat rows;
    for (int a = 0; a < A.dim; ++a)
        for (int b = 0; b < A.dim; ++b)
            for (int c = 0; c < A.dim; ++c)
                for (int t = 0; t < V.dim; ++t) {
                    std::vector<Rat> row(nv, Rat(0));
                    for (const auto& [m1, w1] : A.mul(a, b))
                        for (const auto& [m2, w2] : A.mul(m1, c)) row[m2 * V.dim + t] += w1 * w2;
                    int cyc[3][3] = {{a, b, c}, {b, c, a}, {c, a, b}};
                    for (auto& tri : cyc) {
                        int p = tri[0], q = tri[1], r = tri[2];
                        for (const auto& [m, w] : A.mul(q, r)) {
                            for (int s = 0; s < V.dim; ++s) {
                                row[m * V.dim + s] -= w * w_act(V, p, s, t);
                                row[p * V.dim + s] += w * w_act(V, m, s, t);
                            }
                        }
                    }
                    rows.push_back(std::move(row));
                }
    return nv - dense_rank(rows);
}

// Symmetric Hochschild 2-cocycle equations enumerated over ordered triples;
// variables are the values alpha(a_i, a_j) for i <= j.
inline int harrison_z2_dim(const ModuleActionSpec& V) {
    const AlgebraSpec& A = V.algebra;
    int n = A.dim;
    auto pidx = [&](int i, int j) {
        if (i > j) std::swap(i, j);
        return (i * (2 * n - i - 1)) / 2 + j;  // rank of (i,j), i<=j
    };
    int pairs = n * (n + 1) / 2;
    int nv = pairs * V.dim;
    DenseMat rows;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                for (int t = 0; t < V.dim; ++t) {
                    std::vector<Rat> row(nv, Rat(0));
                    // a.alpha(b,c)
                    for (int s = 0; s < V.dim; ++s) row[pidx(b, c) * V.dim + s] += w_act(V, a, s, t);
                    // - alpha(ab, c)
                    for (const auto& [m, w] : A.mul(a, b)) row[pidx(m, c) * V.dim + t] -= w;
                    // + alpha(a, bc)
                    for (const auto& [m, w] : A.mul(b, c)) row[pidx(a, m) * V.dim + t] += w;
                    // - c.alpha(a,b)
                    for (int s = 0; s < V.dim; ++s) row[pidx(a, b) * V.dim + s] -= w_act(V, c, s, t);
                    rows.push_back(std::move(row));
                }
    return nv - dense_rank(rows);
}

}  // namespace oracle
