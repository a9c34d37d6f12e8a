#pragma once

#include "cce/operators.hpp"
#include "cce/subspace.hpp"

namespace cce {

// Chevalley-Eilenberg differential C^n -> C^{n+1}, coordinates per
// CochainSpaceDescriptor with alternating symmetry. Sign convention (0-based):
//   d phi(x_0..x_n) = sum_i (-1)^i x_i.phi(..^x_i..)
//                   + sum_{i<j} (-1)^{i+j} phi([x_i,x_j], ..^x_i..^x_j..)
// C^0 = M.
inline RatMatrix ce_differential(int n, const AlgebraSpec& g, const ModuleActionSpec& M) {
    if (n < 0) throw dimension_mismatch("ce_differential: n < 0");
    if (g.kind != AlgebraKind::lie) throw validation_error("ce_differential: needs a Lie algebra", {});
    CochainSpaceDescriptor cod(n + 1, g.dim, M.dim, Symmetry::alternating);
    int ncols = M.dim;
    std::optional<CochainSpaceDescriptor> dom;
    if (n >= 1) {
        dom.emplace(n, g.dim, M.dim, Symmetry::alternating);
        ncols = dom->dim();
    }
    std::vector<std::map<int, Rat>> acc(cod.dim());
    for (int r = 0; r < cod.tuple_count(); ++r) {
        const auto& tup = cod.tuple(r);
        // action part
        for (int i = 0; i <= n; ++i) {
            Rat sgn((i % 2 == 0) ? 1 : -1);
            std::vector<int> rest;
            rest.reserve(n);
            for (int k = 0; k <= n; ++k)
                if (k != i) rest.push_back(tup[k]);
            if (n == 0) {
                for (int p = 0; p < M.dim; ++p)
                    for (const auto& [q, v] : M.act(tup[i], p))
                        sv_add_term(acc[cod.coord(tup, q)], p, sgn * v);
            } else {
                int base = dom->rank_of(rest) * M.dim;  // rest already increasing
                for (int p = 0; p < M.dim; ++p)
                    for (const auto& [q, v] : M.act(tup[i], p))
                        sv_add_term(acc[cod.coord(tup, q)], base + p, sgn * v);
            }
        }
        // bracket part
        if (n >= 1) {
            for (int i = 0; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j) {
                    Rat sgn(((i + j) % 2 == 0) ? 1 : -1);
                    std::vector<int> rest;
                    rest.reserve(n - 1);
                    for (int k = 0; k <= n; ++k)
                        if (k != i && k != j) rest.push_back(tup[k]);
                    for (const auto& [b, w] : g.mul(tup[i], tup[j])) {
                        std::vector<int> args;
                        args.reserve(n);
                        args.push_back(b);
                        args.insert(args.end(), rest.begin(), rest.end());
                        int s2 = dom->sort_sign(args);
                        if (s2 == 0) continue;
                        int base = dom->rank_of(args) * M.dim;
                        for (int t = 0; t < M.dim; ++t)
                            sv_add_term(acc[cod.coord(tup, t)], base + t, sgn * Rat(s2) * w);
                    }
                }
        }
    }
    return RatMatrix::from_row_maps(cod.dim(), ncols, acc);
}

struct CohomologyResult {
    int degree = 0;
    int dim = 0;
    LinearSubspace cocycle_space{0};
    LinearSubspace coboundary_space{0};
    std::vector<MultilinearMapCoords> representatives;
};

// H^n(g, M) for n in {0,1,2,3}.
inline CohomologyResult cohomology(int n, const AlgebraSpec& g, const ModuleActionSpec& M) {
    if (n < 0 || n > 3) throw dimension_mismatch("cohomology: degree 0..3 supported");
    RatMatrix dn = ce_differential(n, g, M);
    LinearSubspace Z = kernel(dn);
    LinearSubspace B(Z.ambient_dim());
    if (n > 0) B = image(ce_differential(n - 1, g, M));
    if (!Z.contains(B)) throw std::logic_error("coboundaries not contained in cocycles");
    QuotientResult q = quotient_dim(Z, B);
    CohomologyResult out{n, q.dim, Z, B, {}};
    CochainSpaceDescriptor d(std::max(n, 1), g.dim, M.dim, Symmetry::alternating);
    for (const auto& rep : q.complement)
        out.representatives.push_back(MultilinearMapCoords{d, rep});
    return out;
}

// Invariants M^g = {m : x.m = 0 for all x}.
inline LinearSubspace invariants(const ModuleActionSpec& M) {
    std::vector<std::map<int, Rat>> rows;
    const AlgebraSpec& g = M.algebra;
    std::map<std::pair<int, int>, std::map<int, Rat>> acc;
    for (int i = 0; i < g.dim; ++i)
        for (int p = 0; p < M.dim; ++p)
            for (const auto& [q, v] : M.act(i, p)) acc[{i, q}][p] = v;
    RatMatrix m(static_cast<int>(acc.size()), M.dim);
    int r = 0;
    for (auto& [k, row] : acc) m.set_row(r++, sv_from_map(row));
    return kernel(m);
}

// Hom_L(L, M): solutions of phi([x,y]) = x.phi(y); with M adjoint this is the centroid.
inline LinearSubspace centroid(const AlgebraSpec& L, const ModuleActionSpec& M) {
    CochainSpaceDescriptor dom(1, L.dim, M.dim, Symmetry::none);
    std::vector<std::map<int, Rat>> acc;
    for (int x = 0; x < L.dim; ++x)
        for (int y = 0; y < L.dim; ++y) {
            std::vector<std::map<int, Rat>> rowset(M.dim);
            for (int j = 0; j < dom.dim(); ++j) {
                SparseVec c{{j, Rat(1)}};
                std::map<int, Rat> val;
                for (const auto& [b, w] : L.mul(x, y)) sv_axpy(val, w, evaluate(dom, c, {b}));
                sv_axpy(val, Rat(-1), M.act_vec(x, evaluate(dom, c, {y})));
                for (const auto& [t, v] : val) rowset[t][j] = v;
            }
            for (auto& r : rowset)
                if (!r.empty()) acc.push_back(std::move(r));
        }
    return kernel(RatMatrix::from_row_maps(static_cast<int>(acc.size()), dom.dim(),
                                           acc));
}

// Der(A, V): beta(ab) = a.beta(b) + b.beta(a). Asserts beta(1) = 0 on the result.
inline LinearSubspace derivations(const ModuleActionSpec& V) {
    const AlgebraSpec& A = V.algebra;
    if (A.kind != AlgebraKind::assoc_comm_unital)
        throw validation_error("derivations: needs assoc-comm-unital algebra", {});
    CochainSpaceDescriptor dom(1, A.dim, V.dim, Symmetry::none);
    std::vector<std::map<int, Rat>> acc;
    for (int a = 0; a < A.dim; ++a)
        for (int b = 0; b < A.dim; ++b) {
            std::vector<std::map<int, Rat>> rowset(V.dim);
            for (int j = 0; j < dom.dim(); ++j) {
                SparseVec c{{j, Rat(1)}};
                std::map<int, Rat> val;
                for (const auto& [m, w] : A.mul(a, b)) sv_axpy(val, w, evaluate(dom, c, {m}));
                sv_axpy(val, Rat(-1), V.act_vec(a, evaluate(dom, c, {b})));
                sv_axpy(val, Rat(-1), V.act_vec(b, evaluate(dom, c, {a})));
                for (const auto& [t, v] : val) rowset[t][j] = v;
            }
            for (auto& r : rowset)
                if (!r.empty()) acc.push_back(std::move(r));
        }
    LinearSubspace out = kernel(RatMatrix::from_row_maps(static_cast<int>(acc.size()), dom.dim(), acc));
    // beta(1) = 0 is a consequence; check it on the computed basis
    int unit = A.unit_index.value();
    for (int i = 0; i < out.dim(); ++i) {
        SparseVec v = evaluate(dom, out.basis().row(i), {unit});
        if (!v.empty()) throw std::logic_error("derivation with beta(1) != 0");
    }
    return out;
}

// Der(L) = Z^1(L, adjoint) for a Lie algebra.
inline LinearSubspace lie_derivations(const AlgebraSpec& L) {
    ModuleActionSpec ad;
    ad.algebra = L;
    ad.dim = L.dim;
    for (const auto& [ij, v] : L.product) ad.action[ij] = v;
    return kernel(ce_differential(1, L, ad));
}

// D(A,V): beta(abc) = sum_cyc (a.beta(bc) - bc.beta(a)). Contains Der(A,V).
inline LinearSubspace big_D_space(const ModuleActionSpec& V) {
    const AlgebraSpec& A = V.algebra;
    CochainSpaceDescriptor dom(1, A.dim, V.dim, Symmetry::none);
    std::vector<std::map<int, Rat>> acc;
    for (int a = 0; a < A.dim; ++a)
        for (int b = 0; b < A.dim; ++b)
            for (int cc = 0; cc < A.dim; ++cc) {
                std::vector<std::map<int, Rat>> rowset(V.dim);
                for (int j = 0; j < dom.dim(); ++j) {
                    SparseVec c{{j, Rat(1)}};
                    std::map<int, Rat> val;
                    // beta(abc)
                    for (const auto& [m1, w1] : A.mul(a, b))
                        for (const auto& [m2, w2] : A.mul(m1, cc))
                            sv_axpy(val, w1 * w2, evaluate(dom, c, {m2}));
                    // - sum_cyc (p.beta(qr) - qr.beta(p))
                    const std::array<std::array<int, 3>, 3> cyc{{{a, b, cc}, {b, cc, a}, {cc, a, b}}};
                    for (const auto& [p, q, r3] : cyc) {
                        for (const auto& [m, w] : A.mul(q, r3)) {
                            sv_axpy(val, -w, V.act_vec(p, evaluate(dom, c, {m})));
                            SparseVec bp = evaluate(dom, c, {p});
                            sv_axpy(val, w, V.act_vec(m, bp));
                        }
                    }
                    for (const auto& [t, v] : val) rowset[t][j] = v;
                }
                for (auto& r : rowset)
                    if (!r.empty()) acc.push_back(std::move(r));
            }
    LinearSubspace out = kernel(RatMatrix::from_row_maps(static_cast<int>(acc.size()), dom.dim(), acc));
    if (!out.contains(derivations(V))) throw std::logic_error("Der not contained in D");
    return out;
}

// Symmetric Hochschild 2-cocycles: kernel of the Harrison differential on S^2(A,V).
inline LinearSubspace harrison_Z2(const ModuleActionSpec& V) {
    return kernel(harrison_delta(V));
}

// Coboundaries delta(Hom(A,V)) inside S^2(A,V): a.beta(b) + b.beta(a) - beta(ab).
inline LinearSubspace harrison_B2(const ModuleActionSpec& V) {
    const AlgebraSpec& A = V.algebra;
    RatMatrix sym = op_on_1cochains(V, Op1::sym_action, Symmetry::symmetric);
    ModuleActionSpec mulmod;  // multiplication map through the same op builder
    mulmod.algebra = A;
    mulmod.dim = V.dim;
    // psi(ab) uses only the algebra product; reuse Op1::mult with module dim V:
    // build on a fake module with same dims (action unused by Op1::mult)
    RatMatrix mul = op_on_1cochains(ModuleActionSpec{A, V.dim, {}}, Op1::mult, Symmetry::symmetric);
    return image(sym.plus(mul, Rat(-1)));
}

// HC^1(A,V): alternating alpha with wp(alpha) = 0.
inline LinearSubspace cyclic_HC1(const ModuleActionSpec& V) {
    const AlgebraSpec& A = V.algebra;
    CochainSpaceDescriptor dom(2, A.dim, V.dim, Symmetry::alternating);
    return kernel(op_wp(A, V.dim, dom));
}

}  // namespace cce
