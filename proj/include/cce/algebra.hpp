#pragma once

#include "cce/matrix.hpp"

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace cce {

enum class AlgebraKind { lie, assoc_comm_unital };

struct Violation {
    std::string identity;     // which law failed
    std::vector<int> indices; // basis indices involved
    std::string detail;
};

inline std::string violation_str(const Violation& v) {
    std::ostringstream os;
    os << v.identity << " at (";
    for (std::size_t i = 0; i < v.indices.size(); ++i) {
        if (i) os << ",";
        os << v.indices[i];
    }
    os << ")";
    if (!v.detail.empty()) os << ": " << v.detail;
    return os.str();
}

class validation_error : public std::runtime_error {
public:
    validation_error(const std::string& what, std::vector<Violation> vs)
        : std::runtime_error(what), violations(std::move(vs)) {}
    std::vector<Violation> violations;
};

// Finite-dimensional algebra over Q given by structure constants:
// e_i * e_j = sum_k product[(i,j)][k] e_k.
struct AlgebraSpec {
    std::string name;
    int dim = 0;
    AlgebraKind kind = AlgebraKind::lie;
    std::vector<std::string> basis_labels;
    std::map<std::pair<int, int>, SparseVec> product;
    std::optional<int> unit_index;

    const SparseVec& mul(int i, int j) const {
        static const SparseVec empty;
        auto it = product.find({i, j});
        return it == product.end() ? empty : it->second;
    }

    void set_product(int i, int j, SparseVec v) {
        if (v.empty()) product.erase({i, j});
        else product[{i, j}] = std::move(v);
    }

    // product of sparse vectors in algebra coordinates
    SparseVec mul_vec(const SparseVec& a, const SparseVec& b) const {
        std::map<int, Rat> acc;
        for (const auto& [i, u] : a)
            for (const auto& [j, w] : b)
                sv_axpy(acc, u * w, mul(i, j));
        return sv_from_map(acc);
    }
};

// Action constants of an algebra on a vector space:
// e_i . m_p = sum_q action[(i,p)][q] m_q.
struct ModuleActionSpec {
    AlgebraSpec algebra;
    int dim = 0;
    std::map<std::pair<int, int>, SparseVec> action;

    const SparseVec& act(int i, int p) const {
        static const SparseVec empty;
        auto it = action.find({i, p});
        return it == action.end() ? empty : it->second;
    }

    void set_action(int i, int p, SparseVec v) {
        if (v.empty()) action.erase({i, p});
        else action[{i, p}] = std::move(v);
    }

    // e_i . v for sparse module vector v
    SparseVec act_vec(int i, const SparseVec& v) const {
        std::map<int, Rat> acc;
        for (const auto& [p, w] : v) sv_axpy(acc, w, act(i, p));
        return sv_from_map(acc);
    }

    // x . v for algebra vector x
    SparseVec act_alg_vec(const SparseVec& x, const SparseVec& v) const {
        std::map<int, Rat> acc;
        for (const auto& [i, u] : x)
            for (const auto& [p, w] : v) sv_axpy(acc, u * w, act(i, p));
        return sv_from_map(acc);
    }
};

namespace detail {

inline SparseVec sv_sub(const SparseVec& a, const SparseVec& b) {
    std::map<int, Rat> acc;
    for (const auto& [c, v] : a) sv_add_term(acc, c, v);
    for (const auto& [c, v] : b) sv_add_term(acc, c, -v);
    return sv_from_map(acc);
}

inline SparseVec sv_addv(const SparseVec& a, const SparseVec& b) {
    std::map<int, Rat> acc;
    for (const auto& [c, v] : a) sv_add_term(acc, c, v);
    for (const auto& [c, v] : b) sv_add_term(acc, c, v);
    return sv_from_map(acc);
}

}  // namespace detail

// Checks every defining identity on all basis tuples; returns all failures.
inline std::vector<Violation> validate(const AlgebraSpec& a) {
    using detail::sv_addv;
    using detail::sv_sub;
    std::vector<Violation> out;
    auto basis = [&](int i) { return SparseVec{{i, Rat(1)}}; };
    if (a.kind == AlgebraKind::lie) {
        for (int i = 0; i < a.dim; ++i)
            for (int j = i; j < a.dim; ++j) {
                SparseVec s = sv_addv(a.mul(i, j), a.mul(j, i));
                if (!s.empty()) out.push_back({"antisymmetry", {i, j}, ""});
            }
        for (int i = 0; i < a.dim; ++i)
            for (int j = i + 1; j < a.dim; ++j)
                for (int k = j + 1; k < a.dim; ++k) {
                    SparseVec s = a.mul_vec(a.mul(i, j), basis(k));
                    s = sv_addv(s, a.mul_vec(a.mul(j, k), basis(i)));
                    s = sv_addv(s, a.mul_vec(a.mul(k, i), basis(j)));
                    if (!s.empty()) out.push_back({"jacobi", {i, j, k}, ""});
                }
    } else {
        if (!a.unit_index || *a.unit_index < 0 || *a.unit_index >= a.dim) {
            out.push_back({"unit-missing", {}, "assoc-comm-unital requires unit_index"});
        } else {
            int u = *a.unit_index;
            for (int i = 0; i < a.dim; ++i) {
                if (sv_sub(a.mul(u, i), basis(i)) != SparseVec{})
                    out.push_back({"unit", {i}, "1*e_i != e_i"});
            }
        }
        for (int i = 0; i < a.dim; ++i)
            for (int j = i + 1; j < a.dim; ++j)
                if (!sv_sub(a.mul(i, j), a.mul(j, i)).empty())
                    out.push_back({"commutativity", {i, j}, ""});
        for (int i = 0; i < a.dim; ++i)
            for (int j = 0; j < a.dim; ++j)
                for (int k = 0; k < a.dim; ++k) {
                    SparseVec lhs = a.mul_vec(a.mul(i, j), basis(k));
                    SparseVec rhs = a.mul_vec(basis(i), a.mul(j, k));
                    if (!sv_sub(lhs, rhs).empty())
                        out.push_back({"associativity", {i, j, k}, ""});
                }
    }
    return out;
}

inline std::vector<Violation> validate(const ModuleActionSpec& m) {
    using detail::sv_sub;
    std::vector<Violation> out = validate(m.algebra);
    const AlgebraSpec& a = m.algebra;
    if (a.kind == AlgebraKind::lie) {
        for (int i = 0; i < a.dim; ++i)
            for (int j = 0; j < a.dim; ++j)
                for (int p = 0; p < m.dim; ++p) {
                    SparseVec lhs = m.act_alg_vec(a.mul(i, j), SparseVec{{p, Rat(1)}});
                    SparseVec rhs = sv_sub(m.act_vec(i, m.act(j, p)), m.act_vec(j, m.act(i, p)));
                    if (!sv_sub(lhs, rhs).empty())
                        out.push_back({"lie-module", {i, j, p}, ""});
                }
    } else {
        if (a.unit_index) {
            int u = *a.unit_index;
            for (int p = 0; p < m.dim; ++p)
                if (!sv_sub(m.act(u, p), SparseVec{{p, Rat(1)}}).empty())
                    out.push_back({"unital-module", {p}, "1.v != v"});
        }
        for (int i = 0; i < a.dim; ++i)
            for (int j = 0; j < a.dim; ++j)
                for (int p = 0; p < m.dim; ++p) {
                    SparseVec lhs = m.act_alg_vec(a.mul(i, j), SparseVec{{p, Rat(1)}});
                    SparseVec rhs = m.act_vec(i, m.act(j, p));
                    if (!sv_sub(lhs, rhs).empty())
                        out.push_back({"assoc-module", {i, j, p}, ""});
                }
    }
    return out;
}

inline void require_valid(const AlgebraSpec& a) {
    auto v = validate(a);
    if (!v.empty()) throw validation_error("invalid algebra '" + a.name + "': " + violation_str(v[0]), v);
}

inline void require_valid(const ModuleActionSpec& m) {
    auto v = validate(m);
    if (!v.empty())
        throw validation_error("invalid module over '" + m.algebra.name + "': " + violation_str(v[0]), v);
}

// Basis convention for tensor constructions, used everywhere: (i, j) -> i*dimA + j,
// L-index major.
inline int tensor_index(int i, int j, int dimJ) { return i * dimJ + j; }

// Lie algebra L (x) A with [x(x)a, y(x)b] = [x,y](x)ab.
inline AlgebraSpec current_lie_algebra(const AlgebraSpec& L, const AlgebraSpec& A) {
    if (L.kind != AlgebraKind::lie) throw validation_error("current: L must be lie", {});
    if (A.kind != AlgebraKind::assoc_comm_unital) throw validation_error("current: A must be assoc", {});
    require_valid(L);
    require_valid(A);
    AlgebraSpec out;
    out.name = L.name + "(x)" + A.name;
    out.kind = AlgebraKind::lie;
    out.dim = L.dim * A.dim;
    out.basis_labels.reserve(out.dim);
    for (int i = 0; i < L.dim; ++i)
        for (int j = 0; j < A.dim; ++j) {
            std::string li = i < static_cast<int>(L.basis_labels.size()) ? L.basis_labels[i] : ("x" + std::to_string(i));
            std::string lj = j < static_cast<int>(A.basis_labels.size()) ? A.basis_labels[j] : ("a" + std::to_string(j));
            out.basis_labels.push_back(li + "(x)" + lj);
        }
    for (const auto& [ik, br] : L.product) {
        auto [i, k] = ik;
        for (int j = 0; j < A.dim; ++j)
            for (int l = 0; l < A.dim; ++l) {
                const SparseVec& pr = A.mul(j, l);
                if (pr.empty()) continue;
                std::map<int, Rat> acc;
                for (const auto& [x, v] : br)
                    for (const auto& [y, w] : pr)
                        sv_add_term(acc, tensor_index(x, y, A.dim), v * w);
                SparseVec sv = sv_from_map(acc);
                if (!sv.empty())
                    out.product[{tensor_index(i, j, A.dim), tensor_index(k, l, A.dim)}] = std::move(sv);
            }
    }
    return out;
}

// Module M (x) V over L (x) A with (x(x)a).(m(x)v) = (x.m)(x)(a.v).
inline ModuleActionSpec tensor_module(const ModuleActionSpec& M, const ModuleActionSpec& V) {
    require_valid(M);
    require_valid(V);
    ModuleActionSpec out;
    out.algebra = current_lie_algebra(M.algebra, V.algebra);
    out.dim = M.dim * V.dim;
    int dA = V.algebra.dim, dV = V.dim;
    for (const auto& [ip, am] : M.action) {
        auto [i, p] = ip;
        for (int j = 0; j < dA; ++j)
            for (int q = 0; q < dV; ++q) {
                const SparseVec& av = V.act(j, q);
                if (av.empty()) continue;
                std::map<int, Rat> acc;
                for (const auto& [x, v] : am)
                    for (const auto& [y, w] : av)
                        sv_add_term(acc, tensor_index(x, y, dV), v * w);
                SparseVec sv = sv_from_map(acc);
                if (!sv.empty())
                    out.action[{tensor_index(i, j, dA), tensor_index(p, q, dV)}] = std::move(sv);
            }
    }
    return out;
}

}  // namespace cce
