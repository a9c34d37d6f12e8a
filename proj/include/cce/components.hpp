#pragma once

#include "cce/cohomology.hpp"

namespace cce {

// Machinery for the bidegree decomposition of current-algebra cochains:
//   C^2(L(x)A) ~ C^2(L,M)(x)S^2(A,V) (+) S^2(L,M)(x)C^2(A,V)
// and the components of d^1 and d^2 with respect to it. Coordinates of a
// tensor-product factor space are L-major: idx = iL * dimA_side + iA.

struct CurrentContext {
    AlgebraSpec L, A;
    ModuleActionSpec M, V;
    AlgebraSpec cur;
    ModuleActionSpec MV;

    CurrentContext(const AlgebraSpec& L_, const ModuleActionSpec& M_,
                   const AlgebraSpec& A_, const ModuleActionSpec& V_)
        : L(L_), A(A_), M(M_), V(V_), cur(current_lie_algebra(L_, A_)), MV(tensor_module(M_, V_)) {}
};

namespace comp {

// Embedding of phi (x) alpha into an alternating current 2-cochain.
// symL/symA: (alternating, symmetric) or (symmetric, alternating).
inline RatMatrix embed2(const CurrentContext& cx, Symmetry symL, Symmetry symA) {
    CochainSpaceDescriptor dL(2, cx.L.dim, cx.M.dim, symL);
    CochainSpaceDescriptor dA(2, cx.A.dim, cx.V.dim, symA);
    CochainSpaceDescriptor cd(2, cx.cur.dim, cx.MV.dim, Symmetry::alternating);
    std::vector<std::map<int, Rat>> acc(cd.dim());
    int dimA = cx.A.dim, dV = cx.V.dim;
    for (int jc = 0; jc < dL.dim(); ++jc)
        for (int js = 0; js < dA.dim(); ++js) {
            int col = jc * dA.dim() + js;
            for (int r = 0; r < cd.tuple_count(); ++r) {
                const auto& t = cd.tuple(r);
                int i1 = t[0] / dimA, p1 = t[0] % dimA;
                int i2 = t[1] / dimA, p2 = t[1] % dimA;
                SparseVec ph = evaluate(dL, {{jc, Rat(1)}}, {i1, i2});
                if (ph.empty()) continue;
                SparseVec al = evaluate(dA, {{js, Rat(1)}}, {p1, p2});
                for (const auto& [t1, w1] : ph)
                    for (const auto& [t2, w2] : al)
                        sv_add_term(acc[cd.coord(t, t1 * dV + t2)], col, w1 * w2);
            }
        }
    int cols = dL.dim() * dA.dim();
    return RatMatrix::from_row_maps(cd.dim(), cols, acc);
}

enum class Proj3 { sym_a, alt_a, middle };

// Projects an alternating current 3-cochain (given in alternating coords) into
// full tensor coordinates (dL*dA)^3 * (dM*dV), applying the A-side symmetrizer,
// antisymmetrizer, or the complement of both.
inline RatMatrix project3(const CurrentContext& cx, Proj3 which) {
    CochainSpaceDescriptor cd(3, cx.cur.dim, cx.MV.dim, Symmetry::alternating);
    int dL = cx.L.dim, dA = cx.A.dim, mv = cx.MV.dim;
    long long nfull = 1LL * (dL * dA) * (dL * dA) * (dL * dA) * mv;
    std::vector<std::map<int, Rat>> acc(static_cast<std::size_t>(nfull));
    auto fidx = [&](int i, int j, int k, int p, int q, int r, int t) {
        long long g1 = i * dA + p, g2 = j * dA + q, g3 = k * dA + r;
        return ((g1 * (dL * dA) + g2) * (dL * dA) + g3) * mv + t;
    };
    static const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    static const int psign[6] = {1, -1, -1, 1, 1, -1};
    for (int col = 0; col < cd.dim(); ++col) {
        SparseVec c{{col, Rat(1)}};
        for (int i = 0; i < dL; ++i)
            for (int j = 0; j < dL; ++j)
                for (int k = 0; k < dL; ++k)
                    for (int p = 0; p < dA; ++p)
                        for (int q = 0; q < dA; ++q)
                            for (int r = 0; r < dA; ++r) {
                                std::map<int, Rat> val;
                                int aa[3] = {p, q, r};
                                if (which == Proj3::middle) {
                                    sv_axpy(val, Rat(1),
                                            evaluate(cd, c, {i * dA + p, j * dA + q, k * dA + r}));
                                }
                                for (int s = 0; s < 6; ++s) {
                                    Rat coeff;
                                    switch (which) {
                                        case Proj3::sym_a: coeff = Rat(1, 6); break;
                                        case Proj3::alt_a: coeff = Rat(psign[s], 6); break;
                                        case Proj3::middle: coeff = Rat(-1, 6) - Rat(psign[s], 6); break;
                                    }
                                    if (coeff == 0) continue;
                                    sv_axpy(val, coeff,
                                            evaluate(cd, c,
                                                     {i * dA + aa[perms[s][0]], j * dA + aa[perms[s][1]],
                                                      k * dA + aa[perms[s][2]]}));
                                }
                                for (const auto& [t, v] : val)
                                    sv_add_term(acc[static_cast<std::size_t>(fidx(i, j, k, p, q, r, t))],
                                                col, v);
                            }
    }
    return RatMatrix::from_row_maps(static_cast<int>(nfull), cd.dim(), acc);
}

}  // namespace comp

// Components of d^1 and d^2 for the current algebra, in tensor-side coordinates.
// Component 1 of degree 2 is C^2(L,M)(x)S^2(A,V); component 2 is S^2(L,M)(x)C^2(A,V).
// Degree-3 target components: 1 = C^3(L,M)(x)S^3(A,V), 3 = S^3(L,M)(x)C^3(A,V);
// the middle Young component is realized in full tensor coordinates only.
struct ComponentDifferentials {
    RatMatrix d1;    // C^1(L,M)(x)C^1(A,V) -> comp 1
    RatMatrix d2;    // C^1(L,M)(x)C^1(A,V) -> comp 2
    RatMatrix d11;   // comp 1 -> C^3(L,M)(x)S^3(A,V)
    RatMatrix d12;   // comp 1 -> full tensor coords (middle projection)
    RatMatrix d13;   // comp 1 -> S^3(L,M)(x)C^3(A,V); the zero matrix
    RatMatrix d22;   // comp 2 -> full tensor coords (middle projection)
    RatMatrix d23;   // comp 2 -> S^3(L,M)(x)C^3(A,V)
};

// Only the degree-1 components; much cheaper than the full set.
struct ComponentD1D2 {
    RatMatrix d1, d2;
};

inline ComponentD1D2 component_d1_d2(const CurrentContext& cx) {
    const AlgebraSpec& A = cx.A;
    const ModuleActionSpec& M = cx.M;
    const ModuleActionSpec& V = cx.V;
    RatMatrix skewL = op_on_1cochains(M, Op1::skew_action, Symmetry::alternating);
    RatMatrix symL = op_on_1cochains(M, Op1::sym_action, Symmetry::symmetric);
    RatMatrix brL = op_on_1cochains(M, Op1::bracket, Symmetry::alternating);
    RatMatrix symA = op_on_1cochains(V, Op1::sym_action, Symmetry::symmetric);
    RatMatrix skewA = op_on_1cochains(V, Op1::skew_action, Symmetry::alternating);
    RatMatrix mulA = op_on_1cochains(ModuleActionSpec{A, V.dim, {}}, Op1::mult, Symmetry::symmetric);
    ComponentD1D2 out;
    out.d1 = skewL.kron(symA).scaled(Rat(1, 2)).plus(brL.kron(mulA), Rat(-1));
    out.d2 = symL.kron(skewA).scaled(Rat(1, 2));
    return out;
}

inline ComponentDifferentials component_differentials(const CurrentContext& cx) {
    const AlgebraSpec& L = cx.L;
    const AlgebraSpec& A = cx.A;
    const ModuleActionSpec& M = cx.M;
    const ModuleActionSpec& V = cx.V;
    CochainSpaceDescriptor c2L(2, L.dim, M.dim, Symmetry::alternating);
    CochainSpaceDescriptor s2L(2, L.dim, M.dim, Symmetry::symmetric);
    CochainSpaceDescriptor c2A(2, A.dim, V.dim, Symmetry::alternating);
    CochainSpaceDescriptor s2A(2, A.dim, V.dim, Symmetry::symmetric);
    CochainSpaceDescriptor c3L(3, L.dim, M.dim, Symmetry::alternating);
    CochainSpaceDescriptor s3L(3, L.dim, M.dim, Symmetry::symmetric);
    CochainSpaceDescriptor c3A(3, A.dim, V.dim, Symmetry::alternating);
    CochainSpaceDescriptor s3A(3, A.dim, V.dim, Symmetry::symmetric);
    CochainSpaceDescriptor n3L(3, L.dim, M.dim, Symmetry::none);
    CochainSpaceDescriptor n3A(3, A.dim, V.dim, Symmetry::none);

    RatMatrix dbr = restrict_rows(op_d_bracket(L, M.dim, c2L), n3L, c3L);
    RatMatrix dbu = restrict_rows(op_d_bullet(M, c2L), n3L, c3L);
    RatMatrix dbu_sym = restrict_rows(op_d_bullet(M, s2L), n3L, s3L);
    RatMatrix wp = restrict_rows(op_wp(A, V.dim, s2A), n3A, s3A);
    RatMatrix bd = restrict_rows(op_big_d(V, s2A), n3A, s3A);
    RatMatrix bd_alt = restrict_rows(op_big_d(V, c2A), n3A, c3A);

    ComponentDifferentials out;
    out.d11 = dbu.kron(bd).plus(dbr.kron(wp), Rat(-1)).scaled(Rat(1, 3));
    out.d23 = dbu_sym.kron(bd_alt).scaled(Rat(1, 3));
    out.d13 = RatMatrix(s3L.dim() * c3A.dim(), c2L.dim() * s2A.dim());

    ComponentD1D2 low = component_d1_d2(cx);
    out.d1 = std::move(low.d1);
    out.d2 = std::move(low.d2);

    RatMatrix d2full = ce_differential(2, cx.cur, cx.MV);
    RatMatrix pm = comp::project3(cx, comp::Proj3::middle);
    RatMatrix e1 = comp::embed2(cx, Symmetry::alternating, Symmetry::symmetric);
    RatMatrix e2 = comp::embed2(cx, Symmetry::symmetric, Symmetry::alternating);
    out.d12 = pm.mul(d2full).mul(e1);
    out.d22 = pm.mul(d2full).mul(e2);
    return out;
}

// Relative cochains of (L(x)A, L(x)1): vanish whenever an argument lies in
// L(x)1 and are invariant under its action on cochains. Degree 1 or 2.
inline LinearSubspace relative_cochains(const CurrentContext& cx, int degree) {
    if (degree != 1 && degree != 2) throw dimension_mismatch("relative_cochains degree");
    const AlgebraSpec& cur = cx.cur;
    const ModuleActionSpec& MV = cx.MV;
    int unit = cx.A.unit_index.value();
    CochainSpaceDescriptor d(degree, cur.dim, MV.dim, Symmetry::alternating);
    std::vector<std::map<int, Rat>> rows;
    auto add_rows = [&](std::map<int, Rat>* rowset, int count) {
        for (int t = 0; t < count; ++t)
            if (!rowset[t].empty()) rows.push_back(std::move(rowset[t]));
    };
    // vanishing on insertions of x (x) 1
    for (int i = 0; i < cx.L.dim; ++i) {
        int h = tensor_index(i, unit, cx.A.dim);
        if (degree == 1) {
            std::vector<std::map<int, Rat>> rowset(MV.dim);
            for (int j = 0; j < d.dim(); ++j)
                for (const auto& [t, v] : evaluate(d, {{j, Rat(1)}}, {h})) rowset[t][j] = v;
            add_rows(rowset.data(), MV.dim);
        } else {
            for (int g = 0; g < cur.dim; ++g) {
                std::vector<std::map<int, Rat>> rowset(MV.dim);
                for (int j = 0; j < d.dim(); ++j)
                    for (const auto& [t, v] : evaluate(d, {{j, Rat(1)}}, {h, g})) rowset[t][j] = v;
                add_rows(rowset.data(), MV.dim);
            }
        }
    }
    // invariance: h.Phi(args) - sum_i Phi(.., [h, arg_i], ..) = 0
    for (int i = 0; i < cx.L.dim; ++i) {
        int h = tensor_index(i, unit, cx.A.dim);
        std::vector<int> args(degree, 0);
        std::function<void(int)> rec = [&](int pos) {
            if (pos == degree) {
                std::vector<std::map<int, Rat>> rowset(MV.dim);
                for (int j = 0; j < d.dim(); ++j) {
                    SparseVec c{{j, Rat(1)}};
                    std::map<int, Rat> val;
                    sv_axpy(val, Rat(1), MV.act_alg_vec({{h, Rat(1)}}, evaluate(d, c, args)));
                    for (int a = 0; a < degree; ++a) {
                        for (const auto& [b, w] : cur.mul(h, args[a])) {
                            std::vector<int> args2 = args;
                            args2[a] = b;
                            sv_axpy(val, -w, evaluate(d, c, args2));
                        }
                    }
                    for (const auto& [t, v] : val) rowset[t][j] = v;
                }
                add_rows(rowset.data(), MV.dim);
                return;
            }
            for (int g = 0; g < cur.dim; ++g) {
                args[pos] = g;
                rec(pos + 1);
            }
        };
        rec(0);
    }
    RatMatrix m(static_cast<int>(rows.size()), d.dim());
    for (std::size_t r = 0; r < rows.size(); ++r) m.set_row(static_cast<int>(r), sv_from_map(rows[r]));
    return kernel(m);
}

// H^2 of the relative complex of the subalgebra L (x) 1.
inline CohomologyResult relative_cohomology2(const AlgebraSpec& L, const AlgebraSpec& A,
                                             const ModuleActionSpec& M, const ModuleActionSpec& V) {
    CurrentContext cx(L, M, A, V);
    LinearSubspace C1r = relative_cochains(cx, 1);
    LinearSubspace C2r = relative_cochains(cx, 2);
    RatMatrix d1 = ce_differential(1, cx.cur, cx.MV);
    RatMatrix d2 = ce_differential(2, cx.cur, cx.MV);
    LinearSubspace Z = subspace_intersect(C2r, kernel(d2));
    LinearSubspace B = image_on(d1, C1r);
    if (!Z.contains(B)) throw std::logic_error("relative coboundaries escape the relative cocycles");
    QuotientResult q = quotient_dim(Z, B);
    CohomologyResult out{2, q.dim, Z, B, {}};
    CochainSpaceDescriptor d(2, cx.cur.dim, cx.MV.dim, Symmetry::alternating);
    for (const auto& rep : q.complement) out.representatives.push_back(MultilinearMapCoords{d, rep});
    return out;
}

}  // namespace cce
