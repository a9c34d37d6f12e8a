#pragma once

#include "cce/matrix.hpp"

namespace cce {

class containment_error : public std::runtime_error {
public:
    explicit containment_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Subspace of K^n in canonical form: basis rows in reduced row echelon form.
// Two subspaces are equal iff their basis matrices are identical.
class LinearSubspace {
public:
    explicit LinearSubspace(int ambient) : ambient_(ambient), basis_(0, ambient) {}

    static LinearSubspace from_rows(int ambient, const RatMatrix& rows) {
        if (rows.cols() != ambient) throw dimension_mismatch("subspace ambient");
        LinearSubspace s(ambient);
        auto [r, p] = rref(rows);
        s.basis_ = std::move(r);
        s.pivots_ = std::move(p);
        return s;
    }

    static LinearSubspace from_vectors(int ambient, const std::vector<SparseVec>& vecs) {
        RatMatrix m(static_cast<int>(vecs.size()), ambient);
        for (std::size_t i = 0; i < vecs.size(); ++i) m.set_row(static_cast<int>(i), vecs[i]);
        return from_rows(ambient, m);
    }

    static LinearSubspace full(int ambient) {
        LinearSubspace s(ambient);
        s.basis_ = RatMatrix::identity(ambient);
        s.pivots_.resize(ambient);
        for (int i = 0; i < ambient; ++i) s.pivots_[i] = i;
        return s;
    }

    int ambient_dim() const { return ambient_; }
    int dim() const { return basis_.rows(); }
    const RatMatrix& basis() const { return basis_; }
    const std::vector<int>& pivot_cols() const { return pivots_; }

    // Reduces v against the basis; empty result means membership.
    SparseVec reduce(const SparseVec& v) const {
        std::map<int, Rat> acc;
        for (const auto& [c, w] : v) acc.emplace(c, w);
        for (int i = 0; i < basis_.rows(); ++i) {
            auto it = acc.find(pivots_[i]);
            if (it == acc.end()) continue;
            Rat f = it->second;
            sv_axpy(acc, -f, basis_.row(i));
        }
        return sv_from_map(acc);
    }

    bool contains_vector(const SparseVec& v) const { return reduce(v).empty(); }

    bool contains(const LinearSubspace& other) const {
        if (other.ambient_ != ambient_) throw dimension_mismatch("ambient mismatch");
        for (int i = 0; i < other.basis_.rows(); ++i)
            if (!contains_vector(other.basis_.row(i))) return false;
        return true;
    }

    bool operator==(const LinearSubspace& o) const {
        return ambient_ == o.ambient_ && basis_ == o.basis_;
    }

private:
    int ambient_;
    RatMatrix basis_;
    std::vector<int> pivots_;
};

inline LinearSubspace subspace_sum(const LinearSubspace& u, const LinearSubspace& w) {
    if (u.ambient_dim() != w.ambient_dim()) throw dimension_mismatch("sum: ambient mismatch");
    return LinearSubspace::from_rows(u.ambient_dim(), RatMatrix::vstack(u.basis(), w.basis()));
}

// Stacked-kernel (Zassenhaus) construction: rref of [U U; W 0]; rows whose
// left block vanished carry an intersection basis in the right block.
inline LinearSubspace subspace_intersect(const LinearSubspace& u, const LinearSubspace& w) {
    int n = u.ambient_dim();
    if (n != w.ambient_dim()) throw dimension_mismatch("intersect: ambient mismatch");
    RatMatrix stk(u.dim() + w.dim(), 2 * n);
    for (int i = 0; i < u.dim(); ++i) {
        std::map<int, Rat> acc;
        for (const auto& [c, v] : u.basis().row(i)) {
            acc.emplace(c, v);
            acc.emplace(c + n, v);
        }
        stk.set_row(i, sv_from_map(acc));
    }
    for (int i = 0; i < w.dim(); ++i) stk.set_row(u.dim() + i, w.basis().row(i));
    auto [r, piv] = rref(stk);
    std::vector<SparseVec> out;
    for (int i = 0; i < r.rows(); ++i) {
        if (piv[i] < n) continue;
        SparseVec v;
        for (const auto& [c, val] : r.row(i)) v.emplace_back(c - n, val);
        out.push_back(std::move(v));
    }
    return LinearSubspace::from_vectors(n, out);
}

// Solution space of m x = 0.
inline LinearSubspace kernel(const RatMatrix& m) {
    auto [r, piv] = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int p : piv) is_pivot[p] = true;
    std::vector<SparseVec> basis;
    for (int fcol = 0; fcol < m.cols(); ++fcol) {
        if (is_pivot[fcol]) continue;
        std::map<int, Rat> v;
        v.emplace(fcol, Rat(1));
        for (int i = 0; i < r.rows(); ++i) {
            const Rat* e = sv_find(r.row(i), fcol);
            if (e) v.emplace(piv[i], -*e);
        }
        basis.push_back(sv_from_map(v));
    }
    return LinearSubspace::from_vectors(m.cols(), basis);
}

// Column space.
inline LinearSubspace image(const RatMatrix& m) {
    return LinearSubspace::from_rows(m.rows(), m.transpose());
}

// Image of the restriction of m to a subspace of its domain.
inline LinearSubspace image_on(const RatMatrix& m, const LinearSubspace& dom) {
    std::vector<SparseVec> vecs;
    vecs.reserve(dom.dim());
    for (int i = 0; i < dom.dim(); ++i) vecs.push_back(m.apply(dom.basis().row(i)));
    return LinearSubspace::from_vectors(m.rows(), vecs);
}

struct QuotientResult {
    int dim;
    std::vector<SparseVec> complement;  // rows of u extending w, picked in order
};

// dim(u/w) with a deterministic complement: w's basis is extended by u's basis
// rows taken in order.
inline QuotientResult quotient_dim(const LinearSubspace& u, const LinearSubspace& w) {
    if (u.ambient_dim() != w.ambient_dim()) throw dimension_mismatch("quotient: ambient mismatch");
    if (!u.contains(w)) throw containment_error("quotient: denominator not contained in numerator");
    QuotientResult out;
    LinearSubspace span = w;
    for (int i = 0; i < u.dim(); ++i) {
        const SparseVec& cand = u.basis().row(i);
        if (span.contains_vector(cand)) continue;
        out.complement.push_back(cand);
        span = subspace_sum(span, LinearSubspace::from_vectors(u.ambient_dim(), {cand}));
    }
    out.dim = u.dim() - w.dim();
    if (static_cast<int>(out.complement.size()) != out.dim)
        throw std::logic_error("quotient complement size mismatch");
    return out;
}

inline bool is_direct_sum(const std::vector<LinearSubspace>& parts, const LinearSubspace& whole) {
    int total = 0;
    LinearSubspace acc(whole.ambient_dim());
    for (const auto& p : parts) {
        if (p.ambient_dim() != whole.ambient_dim()) throw dimension_mismatch("direct sum ambient");
        total += p.dim();
        acc = subspace_sum(acc, p);
    }
    return total == whole.dim() && acc == whole;
}

// Rows spanning the annihilator {f : f(s) = 0 for all s in sub}; membership in
// sub is equivalent to annihilator rows pairing to zero.
inline RatMatrix annihilator(const LinearSubspace& sub) {
    LinearSubspace k = kernel(sub.basis());
    return k.basis();
}

// Span of pairwise Kronecker products of basis vectors; lives in K^(a.n * b.n).
inline LinearSubspace kron_subspace(const LinearSubspace& a, const LinearSubspace& b) {
    std::vector<SparseVec> vecs;
    vecs.reserve(static_cast<std::size_t>(a.dim()) * b.dim());
    for (int i = 0; i < a.dim(); ++i) {
        for (int j = 0; j < b.dim(); ++j) {
            std::map<int, Rat> v;
            for (const auto& [c1, v1] : a.basis().row(i))
                for (const auto& [c2, v2] : b.basis().row(j))
                    v.emplace(c1 * b.ambient_dim() + c2, v1 * v2);
            vecs.push_back(sv_from_map(v));
        }
    }
    return LinearSubspace::from_vectors(a.ambient_dim() * b.ambient_dim(), vecs);
}

}  // namespace cce
