#pragma once

#include "cce/catalog.hpp"
#include "cce/prolongation.hpp"

namespace cce {

// Root datum of a classical simple Lie algebra. Type A is constructed natively
// from the elementary-matrix Chevalley basis, which fixes all structure
// constant signs; explicit N_{alpha,alpha'} overrides can be supplied through
// the file format for other conventions.
struct RootDatum {
    char type = 'A';
    int rank = 0;
    // overrides: (root index, root index) -> integer structure constant
    std::vector<std::tuple<int, int, long long>> n_overrides;
};

struct RootSystemRealization {
    AlgebraSpec g;                         // the simple Lie algebra
    std::vector<std::vector<int>> roots;   // root of basis element i (empty for Cartan)
    std::vector<int> cartan;               // basis indices of the Cartan subalgebra
    std::vector<int> root_basis;           // basis indices carrying roots, aligned with `roots`
};

// sl(rank+1) with basis E_ij (i != j) then h_k; root vectors are expressed in
// simple-root coordinates.
inline RootSystemRealization realize_root_system(const RootDatum& rd) {
    if (rd.type != 'A') throw unknown_name(std::string("root system type ") + rd.type +
                                           " (only type A is constructed natively)");
    if (rd.rank < 1) throw dimension_mismatch("root system rank");
    int n = rd.rank;
    RootSystemRealization out;
    out.g = cat::sl(n + 1);
    int offdiag = (n + 1) * n;  // number of E_ij, i != j
    out.roots.assign(out.g.dim, {});
    int k = 0;
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j) {
            if (i == j) continue;
            std::vector<int> v(n, 0);
            if (i < j)
                for (int t = i; t < j; ++t) v[t] = 1;
            else
                for (int t = j; t < i; ++t) v[t] = -1;
            out.roots[k] = v;
            out.root_basis.push_back(k);
            ++k;
        }
    for (int t = 0; t < n; ++t) out.cartan.push_back(offdiag + t);
    if (!rd.n_overrides.empty()) {
        // overrides replace [e_a, e_b] = N e_{a+b} for the given root pair
        for (const auto& [ia, ib, nv] : rd.n_overrides) {
            int a = out.root_basis.at(ia), b = out.root_basis.at(ib);
            std::vector<int> sum(n, 0);
            for (int t = 0; t < n; ++t) sum[t] = out.roots[a][t] + out.roots[b][t];
            int target = -1;
            for (int c : out.root_basis)
                if (out.roots[c] == sum) target = c;
            if (target < 0) throw dimension_mismatch("override: root sum not a root");
            out.g.set_product(a, b, {{target, Rat(nv)}});
            out.g.set_product(b, a, {{target, Rat(-nv)}});
        }
        require_valid(out.g);
    }
    return out;
}

struct RootGrading {
    RootSystemRealization rs;
    int beta = 0;                    // 0-based simple root index
    std::vector<int> gm1, g0, g1;    // basis indices per degree
    GradedLie graded;
};

// Length-1 depth-1 grading by the beta-coefficient of each root. Requires the
// coefficient of beta to be -1, 0 or 1 in every root.
inline RootGrading grading_from_root(const RootDatum& rd, int beta_zero_based) {
    RootGrading out;
    out.rs = realize_root_system(rd);
    out.beta = beta_zero_based;
    if (beta_zero_based < 0 || beta_zero_based >= rd.rank)
        throw dimension_mismatch("beta index out of range");
    for (int b : out.rs.root_basis) {
        int c = out.rs.roots[b][beta_zero_based];
        if (c < -1 || c > 1)
            throw validation_error("beta coefficient condition fails", {});
        if (c == -1) out.gm1.push_back(b);
        else if (c == 0) out.g0.push_back(b);
        else out.g1.push_back(b);
    }
    for (int h : out.rs.cartan) out.g0.push_back(h);
    // assemble the GradedLie tables from the sl structure constants
    GradedLie g;
    g.dims = {static_cast<int>(out.gm1.size()), static_cast<int>(out.g0.size()),
              static_cast<int>(out.g1.size())};
    std::map<int, std::pair<int, int>> pos;  // basis index -> (degree, position)
    for (std::size_t i = 0; i < out.gm1.size(); ++i) pos[out.gm1[i]] = {-1, static_cast<int>(i)};
    for (std::size_t i = 0; i < out.g0.size(); ++i) pos[out.g0[i]] = {0, static_cast<int>(i)};
    for (std::size_t i = 0; i < out.g1.size(); ++i) pos[out.g1[i]] = {1, static_cast<int>(i)};
    auto comp_list = [&](int d) -> const std::vector<int>& {
        return d == -1 ? out.gm1 : (d == 0 ? out.g0 : out.g1);
    };
    for (int di = -1; di <= 1; ++di)
        for (int dj = di; dj <= 1; ++dj) {
            int dk = di + dj;
            if (dk < -1 || dk > 1) {
                // grading forces these brackets to vanish; check it
                for (int p : comp_list(di))
                    for (int q : comp_list(dj))
                        if (!out.rs.g.mul(p, q).empty())
                            throw std::logic_error("grading violated");
                continue;
            }
            std::map<std::pair<int, int>, SparseVec> tab;
            const auto& I = comp_list(di);
            const auto& J = comp_list(dj);
            for (std::size_t pi = 0; pi < I.size(); ++pi)
                for (std::size_t qi = 0; qi < J.size(); ++qi) {
                    const SparseVec& br = out.rs.g.mul(I[pi], J[qi]);
                    if (br.empty()) continue;
                    SparseVec v;
                    for (const auto& [c, w] : br) {
                        auto [dd, cp] = pos.at(c);
                        if (dd != dk) throw std::logic_error("grading violated");
                        v.emplace_back(cp, w);
                    }
                    std::sort(v.begin(), v.end(),
                              [](const auto& a, const auto& b) { return a.first < b.first; });
                    tab[{static_cast<int>(pi), static_cast<int>(qi)}] = std::move(v);
                }
            if (!tab.empty()) g.table[{di, dj}] = std::move(tab);
        }
    out.graded = std::move(g);
    return out;
}

// The linear relation system cutting out Ker T in root coordinates. Variables:
// lambda_alpha^r (alpha simple, r in R_-1) then mu_alpha^r (alpha in R_0 roots).
// Relations collect, for each pair r,s in R_-1 and each u in R_-1, the
// coefficient of e_u in [e_r, psi(e_s)] + [e_s, psi(e_r)]; coupled mu-terms are
// kept together.
inline LinearSubspace kerT_root_relations(const RootGrading& rg) {
    const AlgebraSpec& g = rg.rs.g;
    int nsimple = static_cast<int>(rg.rs.cartan.size());
    std::vector<int> r0roots;
    for (int b : rg.g0)
        if (!rg.rs.roots[b].empty()) r0roots.push_back(b);
    int m = static_cast<int>(rg.gm1.size());
    int per = nsimple + static_cast<int>(r0roots.size());
    int nvars = m * per;
    auto lam = [&](int r, int k) { return r * per + k; };
    auto mu = [&](int r, int a) { return r * per + nsimple + a; };
    // r(h_alpha): [h, e_r] = r(h) e_r
    auto pairing = [&](int rb, int k) {
        const SparseVec& v = g.mul(rg.rs.cartan[k], rb);
        if (v.empty()) return Rat(0);
        if (v.size() != 1 || v[0].first != rb) throw std::logic_error("not a weight vector");
        return v[0].second;
    };
    auto nconst = [&](int sb, int ab) -> std::pair<Rat, int> {
        const SparseVec& v = g.mul(sb, ab);
        if (v.empty()) return {Rat(0), -1};
        if (v.size() != 1) throw std::logic_error("root bracket not rank one");
        return {v[0].second, v[0].first};
    };
    std::map<int, int> gm1pos;
    for (int i = 0; i < m; ++i) gm1pos[rg.gm1[i]] = i;
    std::vector<std::map<int, Rat>> rows;
    for (int ri = 0; ri < m; ++ri)
        for (int si = ri; si < m; ++si)
            for (int ui = 0; ui < m; ++ui) {
                std::map<int, Rat> row;
                int rb = rg.gm1[ri], sb = rg.gm1[si], ub = rg.gm1[ui];
                // [e_r, psi(e_s)]: lambda part hits e_r, mu part hits e_{s... r+alpha}
                if (ui == ri)
                    for (int k = 0; k < nsimple; ++k) {
                        Rat c = pairing(rb, k);
                        if (c != 0) sv_add_term(row, lam(si, k), -c);
                    }
                if (ui == si)
                    for (int k = 0; k < nsimple; ++k) {
                        Rat c = pairing(sb, k);
                        if (c != 0) sv_add_term(row, lam(ri, k), -c);
                    }
                for (std::size_t a = 0; a < r0roots.size(); ++a) {
                    auto [cv, tgt] = nconst(rb, r0roots[a]);
                    if (tgt == ub && cv != 0) sv_add_term(row, mu(si, static_cast<int>(a)), cv);
                    auto [cv2, tgt2] = nconst(sb, r0roots[a]);
                    if (tgt2 == ub && cv2 != 0) sv_add_term(row, mu(ri, static_cast<int>(a)), cv2);
                }
                if (!row.empty()) rows.push_back(std::move(row));
            }
    RatMatrix mrows(static_cast<int>(rows.size()), nvars);
    for (std::size_t r = 0; r < rows.size(); ++r) mrows.set_row(static_cast<int>(r), sv_from_map(rows[r]));
    return kernel(mrows);
}

}  // namespace cce
