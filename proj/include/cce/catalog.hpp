#pragma once

#include "cce/algebra.hpp"

namespace cce {

class unknown_name : public std::runtime_error {
public:
    explicit unknown_name(const std::string& n) : std::runtime_error("unknown catalog name: " + n) {}
};

namespace cat {

inline AlgebraSpec lie_from_brackets(std::string name, std::vector<std::string> labels,
                                     const std::map<std::pair<int, int>, SparseVec>& upper) {
    AlgebraSpec a;
    a.name = std::move(name);
    a.kind = AlgebraKind::lie;
    a.dim = static_cast<int>(labels.size());
    a.basis_labels = std::move(labels);
    for (const auto& [ij, v] : upper) {
        a.product[ij] = v;
        SparseVec neg = v;
        for (auto& [c, x] : neg) x = -x;
        a.product[{ij.second, ij.first}] = std::move(neg);
    }
    return a;
}

// Chevalley basis (e, h, f): [h,e] = 2e, [h,f] = -2f, [e,f] = h.
inline AlgebraSpec sl2() {
    return lie_from_brackets("sl2", {"e", "h", "f"},
                             {{{1, 0}, {{0, Rat(2)}}},
                              {{1, 2}, {{2, Rat(-2)}}},
                              {{0, 2}, {{1, Rat(1)}}}});
}

// sl(n): elementary matrices E_ij (i != j), then h_k = E_kk - E_{k+1,k+1}.
inline AlgebraSpec sl(int n) {
    std::vector<std::pair<int, int>> offdiag;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) offdiag.emplace_back(i, j);
    int dim = static_cast<int>(offdiag.size()) + n - 1;
    auto as_mat = [&](int k) {
        std::map<std::pair<int, int>, Rat> m;
        if (k < static_cast<int>(offdiag.size())) {
            m[offdiag[k]] = Rat(1);
        } else {
            int i = k - static_cast<int>(offdiag.size());
            m[{i, i}] = Rat(1);
            m[{i + 1, i + 1}] = Rat(-1);
        }
        return m;
    };
    std::map<std::pair<int, int>, int> od_index;
    for (std::size_t k = 0; k < offdiag.size(); ++k) od_index[offdiag[k]] = static_cast<int>(k);
    auto to_coords = [&](const std::map<std::pair<int, int>, Rat>& m) {
        std::map<int, Rat> out;
        for (const auto& [ij, v] : m)
            if (ij.first != ij.second && v != 0) out[od_index.at(ij)] = v;
        Rat acc(0);
        for (int i = 0; i + 1 < n; ++i) {
            auto it = m.find({i, i});
            acc += (it == m.end() ? Rat(0) : it->second);
            if (acc != 0) out[static_cast<int>(offdiag.size()) + i] = acc;
        }
        return sv_from_map(out);
    };
    AlgebraSpec a;
    a.name = "sl" + std::to_string(n);
    a.kind = AlgebraKind::lie;
    a.dim = dim;
    for (auto& [i, j] : offdiag)
        a.basis_labels.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
    for (int i = 0; i + 1 < n; ++i) a.basis_labels.push_back("h" + std::to_string(i + 1));
    for (int x = 0; x < dim; ++x)
        for (int y = 0; y < dim; ++y) {
            auto mx = as_mat(x), my = as_mat(y);
            std::map<std::pair<int, int>, Rat> res;
            for (const auto& [ij, v] : mx)
                for (const auto& [kl, w] : my) {
                    if (ij.second == kl.first) res[{ij.first, kl.second}] += v * w;
                    if (kl.second == ij.first) res[{kl.first, ij.second}] -= v * w;
                }
            std::erase_if(res, [](const auto& kv) { return kv.second == 0; });
            SparseVec sv = to_coords(res);
            if (!sv.empty()) a.product[{x, y}] = std::move(sv);
        }
    return a;
}

inline AlgebraSpec gl2() {
    AlgebraSpec a;
    a.name = "gl2";
    a.kind = AlgebraKind::lie;
    a.dim = 4;
    a.basis_labels = {"E11", "E12", "E21", "E22"};
    auto idx = [](int i, int j) { return 2 * i + j; };
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l) {
                    std::map<int, Rat> res;
                    if (j == k) sv_add_term(res, idx(i, l), Rat(1));
                    if (l == i) sv_add_term(res, idx(k, j), Rat(-1));
                    SparseVec sv = sv_from_map(res);
                    if (!sv.empty()) a.product[{idx(i, j), idx(k, l)}] = std::move(sv);
                }
    return a;
}

// Heisenberg: [x,y] = z, z central.
inline AlgebraSpec heis3() {
    return lie_from_brackets("heis3", {"x", "y", "z"}, {{{0, 1}, {{2, Rat(1)}}}});
}

inline AlgebraSpec ab(int n) {
    AlgebraSpec a;
    a.name = "ab" + std::to_string(n);
    a.kind = AlgebraKind::lie;
    a.dim = n;
    for (int i = 0; i < n; ++i) a.basis_labels.push_back("x" + std::to_string(i));
    return a;
}

// K[t]/(t^n), basis 1, t, ..., t^{n-1}.
inline AlgebraSpec tp(int n) {
    AlgebraSpec a;
    a.name = "tp" + std::to_string(n);
    a.kind = AlgebraKind::assoc_comm_unital;
    a.dim = n;
    a.unit_index = 0;
    for (int i = 0; i < n; ++i) a.basis_labels.push_back(i == 0 ? "1" : "t^" + std::to_string(i));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i + j < n) a.product[{i, j}] = {{i + j, Rat(1)}};
    return a;
}

// K[t]/(t^n - 1).
inline AlgebraSpec circ(int n) {
    AlgebraSpec a;
    a.name = "circ" + std::to_string(n);
    a.kind = AlgebraKind::assoc_comm_unital;
    a.dim = n;
    a.unit_index = 0;
    for (int i = 0; i < n; ++i) a.basis_labels.push_back(i == 0 ? "1" : "t^" + std::to_string(i));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            a.product[{i, j}] = {{(i + j) % n, Rat(1)}};
    return a;
}

inline ModuleActionSpec adjoint(const AlgebraSpec& g) {
    ModuleActionSpec m;
    m.algebra = g;
    m.dim = g.dim;
    for (const auto& [ij, v] : g.product) m.action[ij] = v;
    return m;
}

inline ModuleActionSpec trivial(const AlgebraSpec& g, int n) {
    ModuleActionSpec m;
    m.algebra = g;
    m.dim = n;
    return m;
}

inline ModuleActionSpec regular(const AlgebraSpec& a) {
    ModuleActionSpec m;
    m.algebra = a;
    m.dim = a.dim;
    for (const auto& [ij, v] : a.product) m.action[ij] = v;
    return m;
}

}  // namespace cat

// Accepts "ab(2)"/"ab2", "tp(3)"/"tp3", "circ(2)"/"circ2", "K" (= tp1),
// "sl2", "sl3", "sl4", "gl2", "heis3".
inline AlgebraSpec catalog_algebra(const std::string& name) {
    auto num_suffix = [](const std::string& s, const std::string& pre) -> int {
        // matches pre<N> or pre(<N>)
        if (s.rfind(pre, 0) != 0) return -1;
        std::string rest = s.substr(pre.size());
        if (rest.size() >= 2 && rest.front() == '(' && rest.back() == ')')
            rest = rest.substr(1, rest.size() - 2);
        if (rest.empty()) return -1;
        for (char c : rest)
            if (!isdigit(static_cast<unsigned char>(c))) return -1;
        return std::stoi(rest);
    };
    if (name == "K") return cat::tp(1);
    if (name == "sl2") return cat::sl2();
    if (name == "gl2") return cat::gl2();
    if (name == "heis3") return cat::heis3();
    if (int n = num_suffix(name, "sl"); n >= 2) return n == 2 ? cat::sl2() : cat::sl(n);
    if (int n = num_suffix(name, "ab"); n >= 0) return cat::ab(n);
    if (int n = num_suffix(name, "tp"); n >= 1) return cat::tp(n);
    if (int n = num_suffix(name, "circ"); n >= 1) return cat::circ(n);
    throw unknown_name(name);
}

// "adjoint", "trivial(n)", "regular" relative to a given algebra.
inline ModuleActionSpec catalog_module(const std::string& name, const AlgebraSpec& over) {
    if (name == "adjoint") {
        if (over.kind != AlgebraKind::lie) throw unknown_name("adjoint over non-lie algebra");
        return cat::adjoint(over);
    }
    if (name == "regular") {
        if (over.kind != AlgebraKind::assoc_comm_unital) throw unknown_name("regular over non-assoc algebra");
        return cat::regular(over);
    }
    if (name.rfind("trivial", 0) == 0) {
        std::string rest = name.substr(7);
        if (rest.size() >= 2 && rest.front() == '(' && rest.back() == ')')
            rest = rest.substr(1, rest.size() - 2);
        if (!rest.empty()) {
            for (char c : rest)
                if (!isdigit(static_cast<unsigned char>(c))) throw unknown_name(name);
            return cat::trivial(over, std::stoi(rest));
        }
    }
    throw unknown_name(name);
}

}  // namespace cce
