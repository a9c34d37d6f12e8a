#pragma once

#include "cce/algebra.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <numeric>

namespace cce {

enum class Symmetry { alternating, symmetric, none };

// Coordinatization of a space of n-linear maps source^n -> target.
// Canonical basis tuples: strictly increasing (alternating), weakly increasing
// (symmetric), all tuples (none). Coordinate = tuple_rank * target_dim + t:
// target index minor.
class CochainSpaceDescriptor {
public:
    CochainSpaceDescriptor(int arity, int src_dim, int tgt_dim, Symmetry s)
        : arity_(arity), src_(src_dim), tgt_(tgt_dim), symm_(s) {
        std::vector<int> t(arity, 0);
        enumerate(t, 0, 0);
    }

    int arity() const { return arity_; }
    int source_dim() const { return src_; }
    int target_dim() const { return tgt_; }
    Symmetry symmetry() const { return symm_; }
    int tuple_count() const { return static_cast<int>(tuples_.size()); }
    int dim() const { return tuple_count() * tgt_; }
    const std::vector<int>& tuple(int rank) const { return tuples_[rank]; }

    int rank_of(const std::vector<int>& t) const {
        auto it = rank_.find(t);
        if (it == rank_.end()) throw dimension_mismatch("tuple not canonical");
        return it->second;
    }

    int coord(const std::vector<int>& t, int tgt) const { return rank_of(t) * tgt_ + tgt; }

    // Sorts a tuple into canonical order. Returns sign (0 if alternating with a
    // repeat, otherwise +-1 for alternating, +1 for symmetric/none).
    int sort_sign(std::vector<int>& t) const {
        if (symm_ == Symmetry::none) return 1;
        int sign = 1;
        for (std::size_t i = 0; i + 1 < t.size(); ++i)
            for (std::size_t j = 0; j + 1 < t.size() - i; ++j)
                if (t[j] > t[j + 1]) {
                    std::swap(t[j], t[j + 1]);
                    sign = -sign;
                }
        if (symm_ == Symmetry::alternating) {
            for (std::size_t i = 0; i + 1 < t.size(); ++i)
                if (t[i] == t[i + 1]) return 0;
            return sign;
        }
        return 1;
    }

private:
    void enumerate(std::vector<int>& t, int pos, int start) {
        if (pos == arity_) {
            rank_[t] = static_cast<int>(tuples_.size());
            tuples_.push_back(t);
            return;
        }
        if (symm_ == Symmetry::alternating) {
            for (int v = start; v < src_; ++v) {
                t[pos] = v;
                enumerate(t, pos + 1, v + 1);
            }
        } else if (symm_ == Symmetry::symmetric) {
            for (int v = (pos == 0 ? 0 : t[pos - 1]); v < src_; ++v) {
                t[pos] = v;
                enumerate(t, pos + 1, v);
            }
        } else {
            for (int v = 0; v < src_; ++v) {
                t[pos] = v;
                enumerate(t, pos + 1, 0);
            }
        }
    }

    int arity_, src_, tgt_;
    Symmetry symm_;
    std::vector<std::vector<int>> tuples_;
    std::map<std::vector<int>, int> rank_;
};

struct MultilinearMapCoords {
    CochainSpaceDescriptor descriptor;
    SparseVec coords;
};

// Value of the cochain at a basis-index tuple, as a sparse target vector.
inline SparseVec evaluate(const CochainSpaceDescriptor& d, const SparseVec& coords,
                          std::vector<int> args) {
    if (static_cast<int>(args.size()) != d.arity()) throw dimension_mismatch("evaluate arity");
    for (int a : args)
        if (a < 0 || a >= d.source_dim()) throw dimension_mismatch("evaluate index out of range");
    int sign = d.sort_sign(args);
    if (sign == 0) return {};
    int base = d.rank_of(args) * d.target_dim();
    SparseVec out;
    for (const auto& [c, v] : coords) {
        if (c >= base && c < base + d.target_dim())
            out.emplace_back(c - base, sign > 0 ? v : -v);
    }
    return out;
}

inline SparseVec evaluate(const MultilinearMapCoords& f, const std::vector<int>& args) {
    return evaluate(f.descriptor, f.coords, args);
}

// Inclusion matrix from a symmetric/alternating descriptor into the full
// tensor descriptor of the same arity.
inline RatMatrix inclusion_matrix(const CochainSpaceDescriptor& sub,
                                  const CochainSpaceDescriptor& none_desc) {
    if (none_desc.symmetry() != Symmetry::none || sub.arity() != none_desc.arity() ||
        sub.source_dim() != none_desc.source_dim() || sub.target_dim() != none_desc.target_dim())
        throw dimension_mismatch("inclusion shape");
    std::vector<std::map<int, Rat>> acc(none_desc.dim());
    for (int r = 0; r < none_desc.tuple_count(); ++r) {
        std::vector<int> t = none_desc.tuple(r);
        std::vector<int> s = t;
        int sign = sub.sort_sign(s);
        if (sign == 0) continue;
        for (int tg = 0; tg < sub.target_dim(); ++tg)
            acc[r * none_desc.target_dim() + tg][sub.coord(s, tg)] = Rat(sign);
    }
    return RatMatrix::from_row_maps(none_desc.dim(), sub.dim(), acc);
}

// Reads codomain values at the canonical tuples of `sub`; valid when the image
// is known to have that symmetry type.
inline RatMatrix restrict_rows(const RatMatrix& op, const CochainSpaceDescriptor& none_desc,
                               const CochainSpaceDescriptor& sub) {
    if (op.rows() != none_desc.dim()) throw dimension_mismatch("restrict_rows shape");
    std::vector<std::map<int, Rat>> acc(sub.dim());
    for (int r = 0; r < sub.tuple_count(); ++r) {
        int nr = none_desc.rank_of(sub.tuple(r));
        for (int tg = 0; tg < sub.target_dim(); ++tg) {
            for (const auto& [c, v] : op.row(nr * none_desc.target_dim() + tg))
                acc[r * sub.target_dim() + tg][c] = v;
        }
    }
    return RatMatrix::from_row_maps(sub.dim(), op.cols(), acc);
}

struct Cauchy3Dims {
    long long lhs;
    std::array<long long, 3> parts;  // wedge3(L)*S3(A), hook (2,1) pair, S3(L)*wedge3(A)
};

inline long long binom(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// Dimension bookkeeping for the degree-3 decomposition of wedge^3(L (x) A):
// lhs = C(dL*dA,3); parts use the hook Schur dimension y(d) = d(d-1)(d+1)/3.
inline Cauchy3Dims young_cauchy3_dims(long long dL, long long dA) {
    auto y = [](long long d) { return d * (d - 1) * (d + 1) / 3; };
    Cauchy3Dims out;
    out.lhs = binom(dL * dA, 3);
    out.parts = {binom(dL, 3) * binom(dA + 2, 3), y(dL) * y(dA), binom(dL + 2, 3) * binom(dA, 3)};
    return out;
}

}  // namespace cce
