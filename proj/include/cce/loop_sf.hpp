#pragma once

#include "cce/root_system.hpp"
#include "cce/verify.hpp"

namespace cce {

struct LoopStructureFunctions {
    // the five-group display dims (products of independent counts); on
    // truncated gradings these need not sum to the true total
    std::vector<SummandDim> display;
    // exact accounting: nested marginals of the four cocycle-type spans
    std::vector<SummandDim> summands;
    std::map<int, int> spencer_by_order;  // H^{k,2} for k = 1..3; zero beyond
    int sh12 = 0;
    long long formula_total = 0;
    long long direct_total = 0;
    bool match = false;
    bool invariants_check = false;  // g^{g_-1} = g_-1
};

// Structure-function table for a length-1 depth-1 graded g and a finite
// coefficient algebra A. The total of H^2(g_-1 (x) A, g (x) A) is computed two
// ways: from the cocycle-type spans in tensor-side component coordinates, and
// directly from the current-algebra complex.
inline LoopStructureFunctions loop_structure_functions(const GradedLie& graded, const AlgebraSpec& A) {
    if (graded.max_degree() > 1)
        throw dimension_mismatch("loop_structure_functions: length-1 gradings only");
    LoopStructureFunctions out;
    ModuleActionSpec M = graded_adjoint_module(graded);
    const AlgebraSpec& L = M.algebra;
    ModuleActionSpec V = cat::regular(A);

    for (int k = 1; k <= 3; ++k) out.spencer_by_order[k] = spencer_h2(graded, k).dim;
    SymSpencerResult sh = sym_spencer_sh12(graded);
    out.sh12 = sh.dim;

    // Spencer coboundary dimension B^{1,2}
    SpencerH2 s1 = spencer_h2(graded, 1);
    long long b12 = s1.coboundaries.dim();

    LinearSubspace inv = invariants(M);
    std::vector<SparseVec> bottom_vecs;
    for (int i = 0; i < graded.dim(-1); ++i) bottom_vecs.push_back({{i, Rat(1)}});
    out.invariants_check = inv == LinearSubspace::from_vectors(M.dim, bottom_vecs);

    CurrentContext cx(L, M, A, V);
    out.direct_total = cohomology(2, cx.cur, cx.MV).dim;

    // display products
    LinearSubspace der = derivations(V);
    CochainSpaceDescriptor s2A(2, A.dim, V.dim, Symmetry::symmetric);
    CochainSpaceDescriptor c2A(2, A.dim, V.dim, Symmetry::alternating);
    CochainSpaceDescriptor s2m(2, graded.dim(-1), graded.dim(-1), Symmetry::symmetric);
    LinearSubspace vd = subspace_sum(emb::v_embed_S2(V), emb::hom_embed_S2(V, der));
    LinearSubspace skew = emb::skew_embed_C2_full(V);
    long long hge2 = out.spencer_by_order[2] + out.spencer_by_order[3];
    out.display = {{"H12*S2(A,A)", 1LL * out.spencer_by_order[1] * s2A.dim()},
                   {"H(k>=2)*A", hge2 * A.dim},
                   {"B12*S2/(A+Der)", b12 * (s2A.dim() - vd.dim())},
                   {"S2(g-1,g-1)*C2/skew", 1LL * s2m.dim() * (c2A.dim() - skew.dim())},
                   {"SH12*skew", 1LL * out.sh12 * skew.dim()}};

    // exact span accounting in combined component coordinates
    ComponentD1D2 cd = component_d1_d2(cx);
    int n1 = cd.d1.rows(), n2 = cd.d2.rows();
    auto lift1 = [&](const LinearSubspace& s) {
        std::vector<SparseVec> vecs;
        for (int i = 0; i < s.dim(); ++i) vecs.push_back(s.basis().row(i));
        return LinearSubspace::from_vectors(n1 + n2, vecs);
    };
    auto lift2 = [&](const LinearSubspace& s) {
        std::vector<SparseVec> vecs;
        for (int i = 0; i < s.dim(); ++i) {
            SparseVec v;
            for (const auto& [c, w] : s.basis().row(i)) v.emplace_back(c + n1, w);
            vecs.push_back(std::move(v));
        }
        return LinearSubspace::from_vectors(n1 + n2, vecs);
    };
    LinearSubspace B = image(RatMatrix::vstack(cd.d1, cd.d2));
    LinearSubspace Z2L = kernel(ce_differential(2, L, M));
    LinearSubspace c2ml = cochains_into_invariants(L, M, Symmetry::alternating);
    LinearSubspace s2ml = cochains_into_invariants(L, M, Symmetry::symmetric);
    LinearSubspace sym2 = named_space({NamedSpace::Sym2, L, M}).space;
    LinearSubspace s2full = LinearSubspace::full(s2A.dim());
    LinearSubspace c2full = LinearSubspace::full(c2A.dim());
    LinearSubspace vemb = emb::v_embed_S2(V);

    LinearSubspace acc = B;
    auto marginal = [&](const std::string& label, const LinearSubspace& s) {
        LinearSubspace next = subspace_sum(acc, s);
        out.summands.push_back({label, next.dim() - acc.dim()});
        acc = next;
    };
    marginal("induced:Z2(g-1,g)*A", lift1(kron_subspace(Z2L, vemb)));
    marginal("almost-induced:C2(g-1,g-1)*S2(A,A)", lift1(kron_subspace(c2ml, s2full)));
    marginal("S2(g-1,g-1)*C2(A,A)", lift2(kron_subspace(s2ml, c2full)));
    marginal("Sym2(g-1,g)*skew", lift2(kron_subspace(sym2, skew)));
    out.formula_total = acc.dim() - B.dim();
    out.match = out.formula_total == out.direct_total && out.invariants_check;
    return out;
}

}  // namespace cce
