#pragma once

#include "cce/multilinear.hpp"

namespace cce {

// Builders for the degree-2 -> degree-3 symmetrization operators and the
// low-degree one-cochain operators they are assembled from. All matrices are
// exact; codomains are full tensor spaces Hom(X^(x)3, Y) unless stated.

namespace ops {

// accumulate coeff * value into row map of a matrix under construction
inline void emit(std::vector<std::map<int, Rat>>& acc, const CochainSpaceDescriptor& cod,
                 const std::vector<int>& tup, const SparseVec& val, int col, const Rat& coeff = Rat(1)) {
    for (const auto& [t, v] : val)
        sv_add_term(acc[cod.coord(tup, t)], col, coeff * v);
}

// phi(prod(i,j), k) expanded through the structure constants
inline SparseVec eval_prod_left(const CochainSpaceDescriptor& dom, const SparseVec& coords,
                                const AlgebraSpec& alg, int i, int j, int k) {
    std::map<int, Rat> acc;
    for (const auto& [b, w] : alg.mul(i, j)) {
        SparseVec r = evaluate(dom, coords, {b, k});
        sv_axpy(acc, w, r);
    }
    return sv_from_map(acc);
}

}  // namespace ops

// d^br phi(x,y,z) = phi([x,y],z) + phi([y,z],x) + phi([z,x],y).
// Domain symmetry is caller's choice; codomain is the full tensor space.
inline RatMatrix op_d_bracket(const AlgebraSpec& L, int tgt_dim, const CochainSpaceDescriptor& dom) {
    CochainSpaceDescriptor cod(3, L.dim, tgt_dim, Symmetry::none);
    std::vector<std::map<int, Rat>> acc(cod.dim());
    for (int j = 0; j < dom.dim(); ++j) {
        SparseVec c{{j, Rat(1)}};
        for (int r = 0; r < cod.tuple_count(); ++r) {
            const auto& t = cod.tuple(r);
            for (auto [a, b, cc] : {std::array<int, 3>{t[0], t[1], t[2]},
                                    {t[1], t[2], t[0]},
                                    {t[2], t[0], t[1]}})
                ops::emit(acc, cod, t, ops::eval_prod_left(dom, c, L, a, b, cc), j);
        }
    }
    return RatMatrix::from_row_maps(cod.dim(), dom.dim(), acc);
}

// d^act phi(x,y,z) = x.phi(y,z) + y.phi(z,x) + z.phi(x,y).
inline RatMatrix op_d_bullet(const ModuleActionSpec& M, const CochainSpaceDescriptor& dom) {
    CochainSpaceDescriptor cod(3, M.algebra.dim, M.dim, Symmetry::none);
    std::vector<std::map<int, Rat>> acc(cod.dim());
    for (int j = 0; j < dom.dim(); ++j) {
        SparseVec c{{j, Rat(1)}};
        for (int r = 0; r < cod.tuple_count(); ++r) {
            const auto& t = cod.tuple(r);
            for (auto [a, b, cc] : {std::array<int, 3>{t[0], t[1], t[2]},
                                    {t[1], t[2], t[0]},
                                    {t[2], t[0], t[1]}})
                ops::emit(acc, cod, t, M.act_vec(a, evaluate(dom, c, {b, cc})), j);
        }
    }
    return RatMatrix::from_row_maps(cod.dim(), dom.dim(), acc);
}

// wp alpha(a,b,c) = alpha(ab,c) + alpha(bc,a) + alpha(ca,b).
inline RatMatrix op_wp(const AlgebraSpec& A, int tgt_dim, const CochainSpaceDescriptor& dom) {
    return op_d_bracket(A, tgt_dim, dom);  // same cyclic product-insertion shape
}

// D alpha(a,b,c) = a.alpha(b,c) + b.alpha(c,a) + c.alpha(a,b).
inline RatMatrix op_big_d(const ModuleActionSpec& V, const CochainSpaceDescriptor& dom) {
    return op_d_bullet(V, dom);
}

// Harrison (= Hochschild) differential on symmetric 2-cochains:
// delta alpha(a,b,c) = a.alpha(b,c) - alpha(ab,c) + alpha(a,bc) - c.alpha(a,b).
inline RatMatrix harrison_delta(const ModuleActionSpec& V) {
    const AlgebraSpec& A = V.algebra;
    CochainSpaceDescriptor dom(2, A.dim, V.dim, Symmetry::symmetric);
    CochainSpaceDescriptor cod(3, A.dim, V.dim, Symmetry::none);
    std::vector<std::map<int, Rat>> acc(cod.dim());
    for (int j = 0; j < dom.dim(); ++j) {
        SparseVec c{{j, Rat(1)}};
        for (int r = 0; r < cod.tuple_count(); ++r) {
            const auto& t = cod.tuple(r);
            int a = t[0], b = t[1], cc = t[2];
            ops::emit(acc, cod, t, V.act_vec(a, evaluate(dom, c, {b, cc})), j);
            ops::emit(acc, cod, t, ops::eval_prod_left(dom, c, A, a, b, cc), j, Rat(-1));
            ops::emit(acc, cod, t, ops::eval_prod_left(dom, c, A, b, cc, a), j);  // alpha(a,bc) symmetric
            ops::emit(acc, cod, t, V.act_vec(cc, evaluate(dom, c, {a, b})), j, Rat(-1));
        }
    }
    return RatMatrix::from_row_maps(cod.dim(), dom.dim(), acc);
}

// One-cochain operators into 2-cochain spaces. kind selects the formula.
enum class Op1 {
    skew_action,  // (x,y) -> x.psi(y) - y.psi(x)      (alternating values)
    sym_action,   // (x,y) -> x.psi(y) + y.psi(x)      (symmetric values)
    bracket,      // (x,y) -> psi([x,y])               (alternating values)
    mult          // (a,b) -> psi(ab)                  (symmetric values)
};

inline RatMatrix op_on_1cochains(const ModuleActionSpec& M, Op1 kind, Symmetry cod_symm) {
    const AlgebraSpec& L = M.algebra;
    CochainSpaceDescriptor dom(1, L.dim, M.dim, Symmetry::none);
    CochainSpaceDescriptor cod(2, L.dim, M.dim, cod_symm);
    std::vector<std::map<int, Rat>> acc(cod.dim());
    for (int j = 0; j < dom.dim(); ++j) {
        SparseVec c{{j, Rat(1)}};
        for (int r = 0; r < cod.tuple_count(); ++r) {
            const auto& t = cod.tuple(r);
            int x = t[0], y = t[1];
            switch (kind) {
                case Op1::skew_action:
                    ops::emit(acc, cod, t, M.act_vec(x, evaluate(dom, c, {y})), j);
                    ops::emit(acc, cod, t, M.act_vec(y, evaluate(dom, c, {x})), j, Rat(-1));
                    break;
                case Op1::sym_action:
                    ops::emit(acc, cod, t, M.act_vec(x, evaluate(dom, c, {y})), j);
                    ops::emit(acc, cod, t, M.act_vec(y, evaluate(dom, c, {x})), j);
                    break;
                case Op1::bracket:
                case Op1::mult: {
                    std::map<int, Rat> val;
                    for (const auto& [b, w] : L.mul(x, y)) sv_axpy(val, w, evaluate(dom, c, {b}));
                    ops::emit(acc, cod, t, sv_from_map(val), j);
                    break;
                }
            }
        }
    }
    return RatMatrix::from_row_maps(cod.dim(), dom.dim(), acc);
}

}  // namespace cce
