#pragma once

#include "cce/cohomology.hpp"

namespace cce {

// Degree-i pieces of a prolongation are realized as symmetric (i+1)-linear
// maps V^(i+1) -> V; coordinates are (weakly increasing tuple, target) pairs.
class SymMapSpace {
public:
    SymMapSpace(int n, int arity) : n_(n), k_(arity), desc_(arity, n, n, Symmetry::symmetric) {}

    int n() const { return n_; }
    int arity() const { return k_; }
    int dim() const { return desc_.dim(); }
    const CochainSpaceDescriptor& desc() const { return desc_; }

    SparseVec value(const SparseVec& coords, std::vector<int> args) const {
        return evaluate(desc_, coords, std::move(args));
    }

    // F(v, -,...,-): insertion of a basis vector into one slot.
    SparseVec insert(const SparseVec& coords, int v) const {
        if (k_ == 1) return value(coords, {v});
        SymMapSpace sub(n_, k_ - 1);
        std::map<int, Rat> acc;
        for (int r = 0; r < sub.desc_.tuple_count(); ++r) {
            std::vector<int> full = sub.desc_.tuple(r);
            full.push_back(v);
            SparseVec val = value(coords, full);
            for (const auto& [t, w] : val) sv_add_term(acc, r * n_ + t, w);
        }
        return sv_from_map(acc);
    }

private:
    int n_, k_;
    CochainSpaceDescriptor desc_;
};

namespace prolong_detail {

// F o G (v_1..v_{kF+kG-1}) = sum over (kG)-subsets S of slots of F(G(v_S), rest).
inline SparseVec compose_sum(const SymMapSpace& spF, const SparseVec& cF, const SymMapSpace& spG,
                             const SparseVec& cG) {
    int n = spF.n();
    int kF = spF.arity(), kG = spG.arity();
    SymMapSpace res(n, kF + kG - 1);
    std::map<int, Rat> acc;
    int total = kF + kG - 1;
    std::vector<int> subset(kG);
    for (int r = 0; r < res.desc().tuple_count(); ++r) {
        const std::vector<int>& tup = res.desc().tuple(r);
        // iterate over index subsets of size kG
        std::function<void(int, int)> rec = [&](int pos, int start) {
            if (pos == kG) {
                std::vector<int> argsG(kG), rest;
                rest.reserve(kF - 1);
                std::size_t si = 0;
                for (int i = 0; i < total; ++i) {
                    if (si < subset.size() && subset[si] == i) {
                        argsG[si] = tup[i];
                        ++si;
                    } else {
                        rest.push_back(tup[i]);
                    }
                }
                SparseVec g = spG.value(cG, argsG);
                for (const auto& [t, w] : g) {
                    std::vector<int> argsF;
                    argsF.reserve(kF);
                    argsF.push_back(t);
                    argsF.insert(argsF.end(), rest.begin(), rest.end());
                    SparseVec f = spF.value(cF, argsF);
                    for (const auto& [t2, w2] : f) sv_add_term(acc, res.desc().coord(tup, t2), w * w2);
                }
                return;
            }
            for (int i = start; i <= total - (kG - pos); ++i) {
                subset[pos] = i;
                rec(pos + 1, i + 1);
            }
        };
        rec(0, 0);
    }
    return sv_from_map(acc);
}

}  // namespace prolong_detail

// Graded bracket [F,G] = F o G - G o F; reduces to the matrix commutator in
// degree 0 and to insertion against degree -1.
inline SparseVec sym_bracket(const SymMapSpace& spF, const SparseVec& cF, const SymMapSpace& spG,
                             const SparseVec& cG) {
    SparseVec a = prolong_detail::compose_sum(spF, cF, spG, cG);
    SparseVec b = prolong_detail::compose_sum(spG, cG, spF, cF);
    std::map<int, Rat> acc;
    for (const auto& [c, v] : a) sv_add_term(acc, c, v);
    for (const auto& [c, v] : b) sv_add_term(acc, c, -v);
    return sv_from_map(acc);
}

struct Prolongation {
    int n = 0;                               // dim of the degree -1 piece
    std::vector<LinearSubspace> components;  // degree 0, 1, ... inside SymMapSpace coords
    bool stabilized = false;                 // hit a zero component before max_degree
};

// Iterative Cartan prolongation: g_i = {X in Hom(g_-1, g_{i-1}) symmetric with
// all insertions landing in g_{i-1}}. Warns via the returned flag when g_0 does
// not act faithfully.
inline Prolongation cartan_prolong(int n, const LinearSubspace& g0, int max_degree,
                                   bool* faithful = nullptr) {
    if (g0.ambient_dim() != SymMapSpace(n, 1).dim())
        throw dimension_mismatch("cartan_prolong: g0 must live in End coordinates");
    if (faithful) {
        // g0 acts by its defining matrices; zero matrix rows mean non-faithful
        *faithful = true;
        for (int i = 0; i < g0.dim(); ++i)
            if (g0.basis().row(i).empty()) *faithful = false;
    }
    Prolongation out;
    out.n = n;
    out.components.push_back(g0);
    for (int deg = 1; deg <= max_degree; ++deg) {
        SymMapSpace sp(n, deg + 1);
        SymMapSpace prev(n, deg);
        RatMatrix ann = annihilator(out.components.back());
        std::vector<std::map<int, Rat>> rows;
        for (int v = 0; v < n; ++v) {
            for (int ar = 0; ar < ann.rows(); ++ar) {
                std::map<int, Rat> row;
                for (int r = 0; r < prev.desc().tuple_count(); ++r) {
                    std::vector<int> full = prev.desc().tuple(r);
                    full.push_back(v);
                    int sgn = sp.desc().sort_sign(full);
                    (void)sgn;  // symmetric, always 1
                    int base = sp.desc().rank_of(full) * n;
                    for (int t = 0; t < n; ++t) {
                        const Rat* e = sv_find(ann.row(ar), r * n + t);
                        if (e) sv_add_term(row, base + t, *e);
                    }
                }
                if (!row.empty()) rows.push_back(std::move(row));
            }
        }
        RatMatrix m(static_cast<int>(rows.size()), sp.dim());
        for (std::size_t r = 0; r < rows.size(); ++r) m.set_row(static_cast<int>(r), sv_from_map(rows[r]));
        LinearSubspace gi = kernel(m);
        out.components.push_back(gi);
        if (gi.dim() == 0) {
            out.stabilized = true;
            break;
        }
    }
    return out;
}

inline LinearSubspace gl_subspace(int n) { return LinearSubspace::full(SymMapSpace(n, 1).dim()); }

// Depth-1 graded Lie algebra given by explicit bracket tables between realized
// components. Component degrees run -1..max_degree.
struct GradedLie {
    std::vector<int> dims;  // dims[d+1] = dim of g_d
    // table[{i,j}][{p,q}] = [x_{i,p}, x_{j,q}] in g_{i+j} coordinates
    std::map<std::pair<int, int>, std::map<std::pair<int, int>, SparseVec>> table;

    int max_degree() const { return static_cast<int>(dims.size()) - 2; }
    int dim(int d) const {
        return (d < -1 || d > max_degree()) ? 0 : dims[d + 1];
    }
    SparseVec bracket(int di, int dj, int p, int q) const {
        auto it = table.find({di, dj});
        if (it != table.end()) {
            auto jt = it->second.find({p, q});
            return jt == it->second.end() ? SparseVec{} : jt->second;
        }
        auto rit = table.find({dj, di});
        if (rit != table.end()) {
            auto jt = rit->second.find({q, p});
            if (jt == rit->second.end()) return {};
            SparseVec v = jt->second;
            for (auto& [c, w] : v) w = -w;
            return v;
        }
        return {};
    }
    int total_dim() const {
        int s = 0;
        for (int d : dims) s += d;
        return s;
    }
};

// Realizes the prolongation as a GradedLie with explicit brackets between all
// computed components (degrees up to the realized truncation).
inline GradedLie realize_graded(const Prolongation& p) {
    GradedLie g;
    int n = p.n;
    g.dims.push_back(n);
    for (const auto& c : p.components) g.dims.push_back(c.dim());
    auto comp = [&](int d) -> const LinearSubspace& { return p.components[static_cast<std::size_t>(d)]; };
    auto coords_in = [&](const LinearSubspace& sub, const SparseVec& v) {
        // RREF basis: coefficient of basis row i is v[pivot_i]
        SparseVec out;
        for (int i = 0; i < sub.dim(); ++i) {
            const Rat* e = sv_find(v, sub.pivot_cols()[i]);
            if (e && *e != 0) out.emplace_back(i, *e);
        }
        if (!sub.contains_vector(v)) throw std::logic_error("bracket escapes the prolongation");
        return out;
    };
    int maxd = static_cast<int>(p.components.size()) - 1;
    for (int di = -1; di <= maxd; ++di)
        for (int dj = di; dj <= maxd; ++dj) {
            int dk = di + dj;
            if (dk < -1 || dk > maxd) continue;
            std::map<std::pair<int, int>, SparseVec> tab;
            if (di == -1 && dj == -1) continue;  // abelian bottom
            if (di == -1) {
                // [v, G] = -insert_v(G)
                SymMapSpace spG(n, dj + 1);
                const LinearSubspace& cG = comp(dj);
                for (int q = 0; q < cG.dim(); ++q) {
                    SparseVec gq = cG.basis().row(q);
                    for (int v = 0; v < n; ++v) {
                        SparseVec ins = spG.insert(gq, v);
                        for (auto& [c, w] : ins) w = -w;
                        SparseVec val = dk == -1 ? ins : coords_in(comp(dk), ins);
                        if (!val.empty()) tab[{v, q}] = val;
                    }
                }
            } else {
                SymMapSpace spF(n, di + 1), spG(n, dj + 1);
                const LinearSubspace& cF = comp(di);
                const LinearSubspace& cG = comp(dj);
                for (int pI = 0; pI < cF.dim(); ++pI)
                    for (int q = 0; q < cG.dim(); ++q) {
                        SparseVec br = sym_bracket(spF, cF.basis().row(pI), spG, cG.basis().row(q));
                        if (br.empty()) continue;
                        SparseVec val = coords_in(comp(dk), br);
                        if (!val.empty()) tab[{pI, q}] = val;
                    }
            }
            if (!tab.empty()) g.table[{di, dj}] = std::move(tab);
        }
    return g;
}

// Transitivity: no nonzero element of g_0 or g_1 kills g_-1.
inline std::vector<bool> check_transitivity(const GradedLie& g) {
    std::vector<bool> out;
    for (int d = 0; d <= 1 && d <= g.max_degree(); ++d) {
        int nd = g.dim(d), low = g.dim(d - 1);
        std::vector<std::map<int, Rat>> acc(static_cast<std::size_t>(g.dim(-1)) * low);
        for (int p = 0; p < nd; ++p)
            for (int v = 0; v < g.dim(-1); ++v)
                for (const auto& [c, w] : g.bracket(d, -1, p, v)) acc[v * low + c][p] = w;
        RatMatrix m(static_cast<int>(acc.size()), nd);
        for (std::size_t r = 0; r < acc.size(); ++r) m.set_row(static_cast<int>(r), sv_from_map(acc[r]));
        out.push_back(kernel(m).dim() == 0);
    }
    return out;
}

// g as a module over the abelian algebra g_-1 (action by bracket insertion);
// component offsets follow the degree order -1, 0, 1, ...
inline ModuleActionSpec graded_adjoint_module(const GradedLie& g) {
    AlgebraSpec L;
    L.name = "g(-1)";
    L.kind = AlgebraKind::lie;
    L.dim = g.dim(-1);
    ModuleActionSpec M;
    M.algebra = L;
    M.dim = g.total_dim();
    std::vector<int> offset(g.dims.size() + 1, 0);
    for (std::size_t i = 0; i < g.dims.size(); ++i) offset[i + 1] = offset[i] + g.dims[i];
    for (int d = -1; d <= g.max_degree(); ++d) {
        if (d - 1 < -1) continue;
        for (int v = 0; v < g.dim(-1); ++v)
            for (int p = 0; p < g.dim(d); ++p) {
                SparseVec br = g.bracket(-1, d, v, p);
                if (br.empty()) continue;
                SparseVec shifted;
                for (const auto& [c, w] : br) shifted.emplace_back(offset[d] + c, w);
                M.action[{v, offset[d + 1] + p}] = std::move(shifted);
            }
    }
    return M;
}

struct SpencerH2 {
    int k = 0;
    int dim = 0;
    LinearSubspace cocycles;
    LinearSubspace coboundaries;
};

// Order-k component of H^2(g_-1, g): cocycles in C^2(g_-1, g_{k-2}) modulo
// coboundaries from Hom(g_-1, g_{k-1}); g_-1 is abelian.
inline SpencerH2 spencer_h2(const GradedLie& g, int k) {
    int m = g.dim(-1);
    int target = g.dim(k - 2);
    CochainSpaceDescriptor c2(2, m, std::max(target, 1), Symmetry::alternating);
    if (target == 0) return {k, 0, LinearSubspace(0), LinearSubspace(0)};
    if (k - 2 > g.max_degree()) throw dimension_mismatch("spencer_h2: component not realized");
    auto act = [&](int v, int deg, const SparseVec& vec) {
        std::map<int, Rat> acc;
        for (const auto& [p, w] : vec) sv_axpy(acc, w, g.bracket(-1, deg, v, p));
        return sv_from_map(acc);
    };
    // cocycle condition lands in C^3(g_-1, g_{k-3})
    LinearSubspace Z(0);
    if (g.dim(k - 3) > 0) {
        std::vector<std::map<int, Rat>> rows;
        std::vector<int> tup(3);
        for (tup[0] = 0; tup[0] < m; ++tup[0])
            for (tup[1] = tup[0] + 1; tup[1] < m; ++tup[1])
                for (tup[2] = tup[1] + 1; tup[2] < m; ++tup[2]) {
                    std::vector<std::map<int, Rat>> rowset(g.dim(k - 3));
                    for (int j = 0; j < c2.dim(); ++j) {
                        SparseVec c{{j, Rat(1)}};
                        std::map<int, Rat> val;
                        sv_axpy(val, Rat(1), act(tup[0], k - 2, evaluate(c2, c, {tup[1], tup[2]})));
                        sv_axpy(val, Rat(-1), act(tup[1], k - 2, evaluate(c2, c, {tup[0], tup[2]})));
                        sv_axpy(val, Rat(1), act(tup[2], k - 2, evaluate(c2, c, {tup[0], tup[1]})));
                        for (const auto& [t, v] : val) rowset[t][j] = v;
                    }
                    for (auto& r : rowset)
                        if (!r.empty()) rows.push_back(std::move(r));
                }
        RatMatrix mz(static_cast<int>(rows.size()), c2.dim());
        for (std::size_t r = 0; r < rows.size(); ++r) mz.set_row(static_cast<int>(r), sv_from_map(rows[r]));
        Z = kernel(mz);
    } else {
        Z = LinearSubspace::full(c2.dim());
    }
    LinearSubspace B(c2.dim());
    int up = g.dim(k - 1);
    if (up > 0) {
        std::vector<std::map<int, Rat>> acc(c2.dim());
        for (int y0 = 0; y0 < m; ++y0)
            for (int t0 = 0; t0 < up; ++t0) {
                int col = y0 * up + t0;
                for (int r = 0; r < c2.tuple_count(); ++r) {
                    const auto& t = c2.tuple(r);
                    std::map<int, Rat> val;
                    if (t[1] == y0) sv_axpy(val, Rat(1), g.bracket(-1, k - 1, t[0], t0));
                    if (t[0] == y0) sv_axpy(val, Rat(-1), g.bracket(-1, k - 1, t[1], t0));
                    for (const auto& [tt, v] : val) acc[c2.coord(t, tt)][col] = v;
                }
            }
        B = image(RatMatrix::from_row_maps(c2.dim(), m * up, acc));
    }
    if (!Z.contains(B)) throw std::logic_error("spencer: coboundaries not cocycles");
    return {k, Z.dim() - B.dim(), Z, B};
}

struct SymSpencerResult {
    int dim = 0;             // SH^{1,2}
    LinearSubspace ker_T;    // in Hom(g_-1, g_0) coordinates
};

// Symmetric analogue of the first Spencer group:
// T psi (x,y) = [x, psi(y)] + [y, psi(x)], SH^{1,2} = S^2(g_-1,g_-1) / Im T.
inline SymSpencerResult sym_spencer_sh12(const GradedLie& g) {
    int m = g.dim(-1), n0 = g.dim(0);
    CochainSpaceDescriptor s2(2, m, m, Symmetry::symmetric);
    std::vector<std::map<int, Rat>> acc(s2.dim());
    for (int y0 = 0; y0 < m; ++y0)
        for (int t0 = 0; t0 < n0; ++t0) {
            int col = y0 * n0 + t0;
            for (int r = 0; r < s2.tuple_count(); ++r) {
                const auto& t = s2.tuple(r);
                std::map<int, Rat> val;
                if (t[1] == y0) sv_axpy(val, Rat(1), g.bracket(-1, 0, t[0], t0));
                if (t[0] == y0) sv_axpy(val, Rat(1), g.bracket(-1, 0, t[1], t0));
                for (const auto& [tt, v] : val) acc[s2.coord(t, tt)][col] = v;
            }
        }
    RatMatrix T = RatMatrix::from_row_maps(s2.dim(), m * n0, acc);
    return {s2.dim() - image(T).dim(), kernel(T)};
}

// (g_-1 (x) A, g_0 (x) A) as a pair in End(g_-1 (x) A) coordinates.
inline LinearSubspace tensor_pair_g0(int n, const LinearSubspace& g0, const AlgebraSpec& A) {
    int dA = A.dim;
    int N = n * dA;
    SymMapSpace sp(N, 1);
    std::vector<SparseVec> vecs;
    for (int i = 0; i < g0.dim(); ++i) {
        for (int a = 0; a < dA; ++a) {
            std::map<int, Rat> v;
            for (const auto& [c, w] : g0.basis().row(i)) {
                int vi = c / n, t = c % n;
                for (int b = 0; b < dA; ++b)
                    for (const auto& [mm, u] : A.mul(a, b))
                        sv_add_term(v, (vi * dA + b) * N + (t * dA + mm), w * u);
            }
            vecs.push_back(sv_from_map(v));
        }
    }
    return LinearSubspace::from_vectors(sp.dim(), vecs);
}

}  // namespace cce
