#pragma once

#include "cce/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace cce {

class dimension_mismatch : public std::runtime_error {
public:
    explicit dimension_mismatch(const std::string& msg) : std::runtime_error(msg) {}
};

// Sparse vector: (index, value) pairs sorted by index, values nonzero.
using SparseVec = std::vector<std::pair<int, Rat>>;

inline void sv_add_term(std::map<int, Rat>& acc, int idx, const Rat& v) {
    if (v == 0) return;
    auto it = acc.find(idx);
    if (it == acc.end()) {
        acc.emplace(idx, v);
    } else {
        it->second += v;
        if (it->second == 0) acc.erase(it);
    }
}

inline SparseVec sv_from_map(const std::map<int, Rat>& m) {
    SparseVec out;
    out.reserve(m.size());
    for (const auto& [k, v] : m) out.emplace_back(k, v);
    return out;
}

// acc += s * row
inline void sv_axpy(std::map<int, Rat>& acc, const Rat& s, const SparseVec& row) {
    if (s == 0) return;
    for (const auto& [c, v] : row) sv_add_term(acc, c, s * v);
}

inline const Rat* sv_find(const SparseVec& row, int idx) {
    auto it = std::lower_bound(row.begin(), row.end(), idx,
                               [](const std::pair<int, Rat>& p, int i) { return p.first < i; });
    if (it != row.end() && it->first == idx) return &it->second;
    return nullptr;
}

// Exact rational matrix, stored as sparse rows. Rows may be dense in content;
// the layout is uniform and never observable through results.
class RatMatrix {
public:
    RatMatrix() : rows_(0), cols_(0) {}
    RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    static RatMatrix identity(int n) {
        RatMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.data_[i].emplace_back(i, Rat(1));
        return m;
    }

    // Builds from dense row-major entries.
    static RatMatrix from_rows(const std::vector<std::vector<Rat>>& rows) {
        int r = static_cast<int>(rows.size());
        int c = r ? static_cast<int>(rows[0].size()) : 0;
        RatMatrix m(r, c);
        for (int i = 0; i < r; ++i) {
            if (static_cast<int>(rows[i].size()) != c)
                throw dimension_mismatch("ragged rows");
            for (int j = 0; j < c; ++j)
                if (rows[i][j] != 0) m.data_[i].emplace_back(j, rows[i][j]);
        }
        return m;
    }

    const SparseVec& row(int i) const { return data_[i]; }
    void set_row(int i, SparseVec r) { data_[i] = std::move(r); }

    static RatMatrix from_row_maps(int rows, int cols, const std::vector<std::map<int, Rat>>& acc) {
        RatMatrix m(rows, cols);
        for (int i = 0; i < rows && i < static_cast<int>(acc.size()); ++i)
            m.data_[i] = sv_from_map(acc[i]);
        return m;
    }

    Rat at(int i, int j) const {
        if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
            throw dimension_mismatch("index out of range");
        const Rat* p = sv_find(data_[i], j);
        return p ? *p : Rat(0);
    }

    void add(int i, int j, const Rat& v) {
        if (v == 0) return;
        std::map<int, Rat> acc;
        for (auto& [c, w] : data_[i]) acc.emplace(c, w);
        sv_add_term(acc, j, v);
        data_[i] = sv_from_map(acc);
    }

    // y = this * x  (x sparse over columns)
    SparseVec apply(const SparseVec& x) const {
        std::map<int, Rat> acc;
        // column-major pass is wasteful for row storage; walk rows instead
        for (int i = 0; i < rows_; ++i) {
            Rat s(0);
            const SparseVec& r = data_[i];
            auto it = r.begin();
            auto jt = x.begin();
            while (it != r.end() && jt != x.end()) {
                if (it->first < jt->first) ++it;
                else if (jt->first < it->first) ++jt;
                else { s += it->second * jt->second; ++it; ++jt; }
            }
            if (s != 0) acc.emplace(i, s);
        }
        return sv_from_map(acc);
    }

    RatMatrix mul(const RatMatrix& other) const {
        if (cols_ != other.rows_) throw dimension_mismatch("mul shape");
        RatMatrix out(rows_, other.cols_);
        for (int i = 0; i < rows_; ++i) {
            std::map<int, Rat> acc;
            for (const auto& [k, v] : data_[i]) sv_axpy(acc, v, other.data_[k]);
            out.data_[i] = sv_from_map(acc);
        }
        return out;
    }

    RatMatrix transpose() const {
        RatMatrix out(cols_, rows_);
        std::vector<std::map<int, Rat>> acc(cols_);
        for (int i = 0; i < rows_; ++i)
            for (const auto& [j, v] : data_[i]) acc[j].emplace(i, v);
        for (int j = 0; j < cols_; ++j) out.data_[j] = sv_from_map(acc[j]);
        return out;
    }

    RatMatrix scaled(const Rat& s) const {
        RatMatrix out(rows_, cols_);
        if (s == 0) return out;
        for (int i = 0; i < rows_; ++i) {
            out.data_[i] = data_[i];
            for (auto& [c, v] : out.data_[i]) v *= s;
        }
        return out;
    }

    RatMatrix plus(const RatMatrix& other, const Rat& scale = Rat(1)) const {
        if (rows_ != other.rows_ || cols_ != other.cols_)
            throw dimension_mismatch("plus shape");
        RatMatrix out(rows_, cols_);
        for (int i = 0; i < rows_; ++i) {
            std::map<int, Rat> acc;
            for (const auto& [c, v] : data_[i]) acc.emplace(c, v);
            sv_axpy(acc, scale, other.data_[i]);
            out.data_[i] = sv_from_map(acc);
        }
        return out;
    }

    static RatMatrix vstack(const RatMatrix& top, const RatMatrix& bottom) {
        if (top.cols_ != bottom.cols_) throw dimension_mismatch("vstack shape");
        RatMatrix out(top.rows_ + bottom.rows_, top.cols_);
        for (int i = 0; i < top.rows_; ++i) out.data_[i] = top.data_[i];
        for (int i = 0; i < bottom.rows_; ++i) out.data_[top.rows_ + i] = bottom.data_[i];
        return out;
    }

    // Kronecker product; row (i,j) -> i*other.rows+j, same for columns.
    RatMatrix kron(const RatMatrix& other) const {
        RatMatrix out(rows_ * other.rows_, cols_ * other.cols_);
        for (int i = 0; i < rows_; ++i) {
            if (data_[i].empty()) continue;
            for (int j = 0; j < other.rows_; ++j) {
                if (other.data_[j].empty()) continue;
                std::map<int, Rat> acc;
                for (const auto& [c1, v1] : data_[i])
                    for (const auto& [c2, v2] : other.data_[j])
                        acc.emplace(c1 * other.cols_ + c2, v1 * v2);
                out.data_[i * other.rows_ + j] = sv_from_map(acc);
            }
        }
        return out;
    }

    bool is_zero() const {
        for (const auto& r : data_)
            if (!r.empty()) return false;
        return true;
    }

    bool operator==(const RatMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

    long long nnz() const {
        long long n = 0;
        for (const auto& r : data_) n += static_cast<long long>(r.size());
        return n;
    }

private:
    int rows_, cols_;
    std::vector<SparseVec> data_;
};

// Reduced row echelon form with zero rows dropped; the canonical representative
// of the row space. Pivot row choice (fewest nonzeros) only affects speed.
inline std::pair<RatMatrix, std::vector<int>> rref(const RatMatrix& m) {
    struct Row {
        std::map<int, Rat> v;
    };
    std::vector<std::map<int, Rat>> work;
    work.reserve(m.rows());
    for (int i = 0; i < m.rows(); ++i) {
        if (m.row(i).empty()) continue;
        std::map<int, Rat> r;
        for (const auto& [c, v] : m.row(i)) r.emplace(c, v);
        work.push_back(std::move(r));
    }
    std::vector<std::map<int, Rat>> done;
    std::vector<int> pivots;
    while (!work.empty()) {
        // leftmost pivot column present in any remaining row
        int col = m.cols();
        for (const auto& r : work) col = std::min(col, r.begin()->first);
        // among rows starting at col, pick the sparsest
        std::size_t best = work.size();
        for (std::size_t i = 0; i < work.size(); ++i) {
            if (work[i].begin()->first != col) continue;
            if (best == work.size() || work[i].size() < work[best].size()) best = i;
        }
        std::map<int, Rat> piv = std::move(work[best]);
        work.erase(work.begin() + static_cast<long>(best));
        Rat inv = Rat(1) / piv.begin()->second;
        for (auto& [c, v] : piv) v *= inv;
        auto eliminate = [&](std::map<int, Rat>& r) {
            auto it = r.find(col);
            if (it == r.end()) return;
            Rat f = it->second;
            for (const auto& [c, v] : piv) {
                auto jt = r.find(c);
                if (jt == r.end()) {
                    r.emplace(c, -f * v);
                } else {
                    jt->second -= f * v;
                    if (jt->second == 0) r.erase(jt);
                }
            }
        };
        for (auto& r : work) eliminate(r);
        std::erase_if(work, [](const std::map<int, Rat>& r) { return r.empty(); });
        for (auto& r : done) eliminate(r);
        done.push_back(std::move(piv));
        pivots.push_back(col);
    }
    // sort rows by pivot column
    std::vector<std::size_t> order(done.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pivots[a] < pivots[b]; });
    RatMatrix out(static_cast<int>(done.size()), m.cols());
    std::vector<int> piv_sorted;
    piv_sorted.reserve(done.size());
    for (std::size_t k = 0; k < order.size(); ++k) {
        out.set_row(static_cast<int>(k), sv_from_map(done[order[k]]));
        piv_sorted.push_back(pivots[order[k]]);
    }
    return {out, piv_sorted};
}

}  // namespace cce
