#pragma once

#include "cce/catalog.hpp"
#include "cce/components.hpp"

namespace cce {

// Constructors for the named subspaces of 2-cochain spaces that serve as
// building blocks for the H^1/H^2 decompositions. Every space is the exact
// solution set of its defining identities quantified over all basis tuples,
// solved as one stacked linear system; image-type spaces are matrix images.

enum class NamedSpace {
    B_script,      // {phi in C2 : phi([x,y],z) + z.phi(x,y) = 0, d^br phi = 0}
    Q2,            // {d psi : x.psi(y) = y.psi(x)}
    HM2,           // (Z2(L,M^L) + Q2) / Q2
    K_script,      // {phi in C2 : d^br phi(x,y,z) = 2 x.phi(y,z)}
    J_script,      // image of psi -> psi([x,y]) - 1/2 x.psi(y) + 1/2 y.psi(x)
    H_script,      // (K_script + J_script) / J_script
    X_script,      // {phi in C2 : 2phi([x,y],z) = z.phi(x,y), phi([x,y],z) = phi([z,x],y)}
    T_script,      // {phi in C2 : 3phi([x,y],z) = 2z.phi(x,y), phi([x,y],z) = phi([z,x],y)}
    Poor_minus,    // {phi in C2(L,M^L) : phi([L,L],L) = 0}
    Poor_plus,     // symmetric variant
    Sym2,          // {phi in S2 : x.phi(y,z) = y.phi(x,z)}
    SB2,           // {(x,y) -> x.psi(y) + y.psi(x)}
    SH2,           // (Sym2 + SB2) / SB2
    S2_script,     // {phi in S2(L,M)^L : cyclic phi([x,y],z) = 0}
    D_space,       // {beta : beta(abc) = sum_cyc(a.beta(bc) - bc.beta(a))}
    HC1,           // {alpha in C2(A,V) : wp alpha = 0}
    C2_script,     // {alpha in C2 : alpha(ac,b) - alpha(bc,a) + a.alpha(b,c) - b.alpha(a,c) - 2c.alpha(a,b) = 0}
    P_minus,       // {alpha in C2 : alpha(ab,c) = a.alpha(b,c) + b.alpha(a,c)}
    P_plus,        // symmetric variant
    A_script,      // {alpha in S2 : 2 D alpha = wp alpha}
    C2_invariants  // C2(L,M)^L under z o phi(x,y) = z.phi(x,y) + phi([x,z],y) + phi(x,[y,z])
};

struct NamedSpaceRequest {
    NamedSpace name;
    // lie-side spaces use (L, M); assoc-side spaces use (A, V) passed the same way
    AlgebraSpec alg;
    ModuleActionSpec mod;
};

struct NamedSpaceResult {
    LinearSubspace space;            // the space itself (numerator for quotient names)
    std::optional<LinearSubspace> denominator;
    int quotient_dim = -1;           // set for quotient names
    std::vector<SparseVec> complement;
};

namespace detail_ns {

template <typename Fn>
LinearSubspace solve2(const CochainSpaceDescriptor& dom, int src_dim, int arity, Fn cond) {
    std::vector<std::map<int, Rat>> rows;
    std::vector<int> tup(arity, 0);
    std::function<void(int)> rec = [&](int pos) {
        if (pos == arity) {
            std::vector<std::map<int, Rat>> rowset(dom.target_dim());
            for (int j = 0; j < dom.dim(); ++j) {
                SparseVec c{{j, Rat(1)}};
                for (const auto& [t, v] : cond(tup, c)) rowset[t][j] = v;
            }
            for (auto& r : rowset)
                if (!r.empty()) rows.push_back(std::move(r));
            return;
        }
        for (int v = 0; v < src_dim; ++v) {
            tup[pos] = v;
            rec(pos + 1);
        }
    };
    rec(0);
    RatMatrix m(static_cast<int>(rows.size()), dom.dim());
    for (std::size_t r = 0; r < rows.size(); ++r) m.set_row(static_cast<int>(r), sv_from_map(rows[r]));
    return kernel(m);
}

inline SparseVec sv_scale_add(std::initializer_list<std::pair<Rat, SparseVec>> terms) {
    std::map<int, Rat> acc;
    for (const auto& [s, v] : terms) sv_axpy(acc, s, v);
    return sv_from_map(acc);
}

// cyclic sum of phi([a,b],c)
inline SparseVec dbr_value(const CochainSpaceDescriptor& dom, const SparseVec& c,
                           const AlgebraSpec& L, int x, int y, int z) {
    std::map<int, Rat> acc;
    for (auto [a, b, cc] : {std::array<int, 3>{x, y, z}, {y, z, x}, {z, x, y}})
        sv_axpy(acc, Rat(1), ops::eval_prod_left(dom, c, L, a, b, cc));
    return sv_from_map(acc);
}

inline SparseVec dbu_value(const CochainSpaceDescriptor& dom, const SparseVec& c,
                           const ModuleActionSpec& M, int x, int y, int z) {
    std::map<int, Rat> acc;
    for (auto [a, b, cc] : {std::array<int, 3>{x, y, z}, {y, z, x}, {z, x, y}})
        sv_axpy(acc, Rat(1), M.act_vec(a, evaluate(dom, c, {b, cc})));
    return sv_from_map(acc);
}

}  // namespace detail_ns

// Values-in-M^L condition expressed linearly: z.phi(x,y) = 0 for all z.
inline LinearSubspace cochains_into_invariants(const AlgebraSpec& L, const ModuleActionSpec& M,
                                               Symmetry symm) {
    CochainSpaceDescriptor dom(2, L.dim, M.dim, symm);
    return detail_ns::solve2(dom, L.dim, 3, [&](const std::vector<int>& t, const SparseVec& c) {
        return M.act_vec(t[2], evaluate(dom, c, {t[0], t[1]}));
    });
}

// Invariants of the standard action z o phi(x,y) = z.phi(x,y) + phi([x,z],y) + phi(x,[y,z]).
inline LinearSubspace hom2_invariants(const AlgebraSpec& L, const ModuleActionSpec& M, Symmetry symm) {
    CochainSpaceDescriptor dom(2, L.dim, M.dim, symm);
    return detail_ns::solve2(dom, L.dim, 3, [&](const std::vector<int>& t, const SparseVec& c) {
        int x = t[0], y = t[1], z = t[2];
        std::map<int, Rat> acc;
        sv_axpy(acc, Rat(1), M.act_vec(z, evaluate(dom, c, {x, y})));
        for (const auto& [b, w] : L.mul(x, z)) sv_axpy(acc, w, evaluate(dom, c, {b, y}));
        for (const auto& [b, w] : L.mul(y, z)) sv_axpy(acc, w, evaluate(dom, c, {x, b}));
        return sv_from_map(acc);
    });
}

// Z^2(L, M^L): alternating, values in M^L, d^br phi = 0 (the action part dies on
// invariant values).
inline LinearSubspace z2_into_invariants(const AlgebraSpec& L, const ModuleActionSpec& M) {
    CochainSpaceDescriptor dom(2, L.dim, M.dim, Symmetry::alternating);
    LinearSubspace vals = cochains_into_invariants(L, M, Symmetry::alternating);
    LinearSubspace closed = detail_ns::solve2(dom, L.dim, 3, [&](const std::vector<int>& t, const SparseVec& c) {
        return detail_ns::dbr_value(dom, c, L, t[0], t[1], t[2]);
    });
    return subspace_intersect(vals, closed);
}

inline NamedSpaceResult named_space(const NamedSpaceRequest& req) {
    using namespace detail_ns;
    const AlgebraSpec& G = req.alg;
    const ModuleActionSpec& Mo = req.mod;
    NamedSpaceResult out{LinearSubspace(0), std::nullopt, -1, {}};
    CochainSpaceDescriptor alt2(2, G.dim, Mo.dim, Symmetry::alternating);
    CochainSpaceDescriptor sym2d(2, G.dim, Mo.dim, Symmetry::symmetric);

    auto quotient_result = [&](const LinearSubspace& num, const LinearSubspace& den) {
        NamedSpaceResult r{subspace_sum(num, den), den, -1, {}};
        QuotientResult q = quotient_dim(r.space, den);
        r.quotient_dim = q.dim;
        r.complement = q.complement;
        return r;
    };

    switch (req.name) {
        case NamedSpace::B_script: {
            LinearSubspace c1 = solve2(alt2, G.dim, 3, [&](const std::vector<int>& t, const SparseVec& c) {
                return sv_scale_add({{Rat(1), ops::eval_prod_left(alt2, c, G, t[0], t[1], t[2])},
                                     {Rat(1), Mo.act_vec(t[2], evaluate(alt2, c, {t[0], t[1]}))}});
            });
            LinearSubspace c2 = solve2(alt2, G.dim, 3, [&](const std::vector<int>& t, const SparseVec& c) {
                return dbr_value(alt2, c, G, t[0], t[1], t[2]);
            });
            out.space = subspace_intersect(c1, c2);
            return out;
        }
        case NamedSpace::Q2: {
            CochainSpaceDescriptor c1d(1, G.dim, Mo.dim, Symmetry::none);
            LinearSubspace symact = solve2(c1d, G.dim, 2, [&](const std::vector<int>& t, const SparseVec& c) {
                return sv_scale_add({{Rat(1), Mo.act_vec(t[0], evaluate(c1d, c, {t[1]}))},
                                     {Rat(-1), Mo.act_vec(t[1], evaluate(c1d, c, {t[0]}))}});
            });
            out.space = image_on(ce_differential(1, G, Mo), symact);
            return out;
        }
        case NamedSpace::HM2: {
            LinearSubspace q2 = named_space({NamedSpace::Q2, G, Mo}).space;
            return quotient_result(z2_into_invariants(G, Mo), q2);
        }
        case NamedSpace::K_script: {
            out.space = solve2(alt2, G.dim, 3, [&](const std::vector<int>& t, const SparseVec& c) {
                return sv_scale_add({{Rat(1), dbr_value(alt2, c, G, t[0], t[1], t[2])},
                                     {Rat(-2), Mo.act_vec(t[0], evaluate(alt2, c, {t[1], t[2]}))}});
            });
            return out;
        }
        case NamedSpace::J_script: {
            RatMatrix br = op_on_1cochains(Mo, Op1::bracket, Symmetry::alternating);
            RatMatrix skew = op_on_1cochains(Mo, Op1::skew_action, Symmetry::alternating);
            out.space = image(br.plus(skew, Rat(-1, 2)));
            return out;
        }
        case NamedSpace::H_script: {
            LinearSubspace K = named_space({NamedSpace::K_script, G, Mo}).space;
            LinearSubspace J = named_space({NamedSpace::J_script, G, Mo}).space;
            return quotient_result(K, J);
        }
        case NamedSpace::X_script:
        case NamedSpace::T_script: {
            Rat cb = req.name == NamedSpace::X_script ? Rat(2) : Rat(3);
            Rat ca = req.name == NamedSpace::X_script ? Rat(1) : Rat(2);
            LinearSubspace c1 = solve2(alt2, G.dim, 3, [&](const std::vector<int>& t, const SparseVec& c) {
                return sv_scale_add({{cb, ops::eval_prod_left(alt2, c, G, t[0], t[1], t[2])},
                                     {-ca, Mo.act_vec(t[2], evaluate(alt2, c, {t[0], t[1]}))}});
            });
            LinearSubspace c2 = solve2(alt2, G.dim, 3, [&](const std::vector<int>& t, const SparseVec& c) {
                return sv_scale_add({{Rat(1), ops::eval_prod_left(alt2, c, G, t[0], t[1], t[2])},
                                     {Rat(-1), ops::eval_prod_left(alt2, c, G, t[2], t[0], t[1])}});
            });
            out.space = subspace_intersect(c1, c2);
            return out;
        }
        case NamedSpace::Poor_minus:
        case NamedSpace::Poor_plus: {
            Symmetry s = req.name == NamedSpace::Poor_minus ? Symmetry::alternating : Symmetry::symmetric;
            CochainSpaceDescriptor dom(2, G.dim, Mo.dim, s);
            LinearSubspace vals = cochains_into_invariants(G, Mo, s);
            LinearSubspace brz = solve2(dom, G.dim, 3, [&](const std::vector<int>& t, const SparseVec& c) {
                return ops::eval_prod_left(dom, c, G, t[0], t[1], t[2]);
            });
            out.space = subspace_intersect(vals, brz);
            return out;
        }
        case NamedSpace::Sym2: {
            out.space = solve2(sym2d, G.dim, 3, [&](const std::vector<int>& t, const SparseVec& c) {
                return sv_scale_add({{Rat(1), Mo.act_vec(t[0], evaluate(sym2d, c, {t[1], t[2]}))},
                                     {Rat(-1), Mo.act_vec(t[1], evaluate(sym2d, c, {t[0], t[2]}))}});
            });
            return out;
        }
        case NamedSpace::SB2: {
            out.space = image(op_on_1cochains(Mo, Op1::sym_action, Symmetry::symmetric));
            return out;
        }
        case NamedSpace::SH2: {
            LinearSubspace s = named_space({NamedSpace::Sym2, G, Mo}).space;
            LinearSubspace b = named_space({NamedSpace::SB2, G, Mo}).space;
            return quotient_result(s, b);
        }
        case NamedSpace::S2_script: {
            LinearSubspace inv = hom2_invariants(G, Mo, Symmetry::symmetric);
            LinearSubspace cyc = solve2(sym2d, G.dim, 3, [&](const std::vector<int>& t, const SparseVec& c) {
                return dbr_value(sym2d, c, G, t[0], t[1], t[2]);
            });
            out.space = subspace_intersect(inv, cyc);
            return out;
        }
        case NamedSpace::D_space: {
            out.space = big_D_space(Mo);
            return out;
        }
        case NamedSpace::HC1: {
            out.space = cyclic_HC1(Mo);
            return out;
        }
        case NamedSpace::C2_script: {
            out.space = solve2(alt2, G.dim, 3, [&](const std::vector<int>& t, const SparseVec& c) {
                int a = t[0], b = t[1], cc = t[2];
                return sv_scale_add({{Rat(1), ops::eval_prod_left(alt2, c, G, a, cc, b)},
                                     {Rat(-1), ops::eval_prod_left(alt2, c, G, b, cc, a)},
                                     {Rat(1), Mo.act_vec(a, evaluate(alt2, c, {b, cc}))},
                                     {Rat(-1), Mo.act_vec(b, evaluate(alt2, c, {a, cc}))},
                                     {Rat(-2), Mo.act_vec(cc, evaluate(alt2, c, {a, b}))}});
            });
            return out;
        }
        case NamedSpace::P_minus:
        case NamedSpace::P_plus: {
            Symmetry s = req.name == NamedSpace::P_minus ? Symmetry::alternating : Symmetry::symmetric;
            CochainSpaceDescriptor dom(2, G.dim, Mo.dim, s);
            out.space = solve2(dom, G.dim, 3, [&](const std::vector<int>& t, const SparseVec& c) {
                int a = t[0], b = t[1], cc = t[2];
                return sv_scale_add({{Rat(1), ops::eval_prod_left(dom, c, G, a, b, cc)},
                                     {Rat(-1), Mo.act_vec(a, evaluate(dom, c, {b, cc}))},
                                     {Rat(-1), Mo.act_vec(b, evaluate(dom, c, {a, cc}))}});
            });
            return out;
        }
        case NamedSpace::A_script: {
            out.space = solve2(sym2d, G.dim, 3, [&](const std::vector<int>& t, const SparseVec& c) {
                return sv_scale_add({{Rat(2), dbu_value(sym2d, c, Mo, t[0], t[1], t[2])},
                                     {Rat(-1), dbr_value(sym2d, c, G, t[0], t[1], t[2])}});
            });
            return out;
        }
        case NamedSpace::C2_invariants: {
            out.space = hom2_invariants(G, Mo, Symmetry::alternating);
            return out;
        }
    }
    throw unknown_name("named_space enum");
}

struct ContainmentCheck {
    std::string subset, superset;
    bool holds;
    bool equality;  // relation asserts equality rather than containment
};

// The six relations between the named spaces, evaluated exactly.
inline std::vector<ContainmentCheck> containment_report(const AlgebraSpec& L, const ModuleActionSpec& M,
                                                        const AlgebraSpec& A, const ModuleActionSpec& V) {
    std::vector<ContainmentCheck> out;
    LinearSubspace Bsc = named_space({NamedSpace::B_script, L, M}).space;
    LinearSubspace Z2 = kernel(ce_differential(2, L, M));
    LinearSubspace Pm = named_space({NamedSpace::Poor_minus, L, M}).space;
    LinearSubspace Pp = named_space({NamedSpace::Poor_plus, L, M}).space;
    LinearSubspace Ssc = named_space({NamedSpace::S2_script, L, M}).space;
    LinearSubspace s2mll = subspace_intersect(hom2_invariants(L, M, Symmetry::symmetric),
                                              cochains_into_invariants(L, M, Symmetry::symmetric));
    LinearSubspace z2ml = z2_into_invariants(L, M);
    LinearSubspace Csc = named_space({NamedSpace::C2_script, A, V}).space;
    LinearSubspace hc1 = cyclic_HC1(V);
    LinearSubspace pmn = named_space({NamedSpace::P_minus, A, V}).space;
    LinearSubspace z2h = harrison_Z2(V);
    LinearSubspace asc = named_space({NamedSpace::A_script, A, V}).space;
    LinearSubspace ppl = named_space({NamedSpace::P_plus, A, V}).space;
    LinearSubspace der = derivations(V);
    LinearSubspace dsp = big_D_space(V);
    out.push_back({"Poor-", "B", Bsc.contains(Pm), false});
    out.push_back({"B", "Z2", Z2.contains(Bsc), false});
    out.push_back({"B /\\ Z2(L,M^L)", "Poor-", subspace_intersect(Bsc, z2ml) == Pm, true});
    out.push_back({"S2script /\\ S2(L,M^L)^L", "Poor+", subspace_intersect(Ssc, s2mll) == Pp, true});
    out.push_back({"C2script /\\ HC1", "P-", subspace_intersect(Csc, hc1) == pmn, true});
    out.push_back({"Z2harr /\\ A", "P+", subspace_intersect(z2h, asc) == ppl, true});
    out.push_back({"Der", "D", dsp.contains(der), false});
    return out;
}

}  // namespace cce
