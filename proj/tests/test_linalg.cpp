#include "cce/subspace.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace cce;

namespace {

RatMatrix dense(const std::vector<std::vector<long long>>& rows) {
    std::vector<std::vector<Rat>> r;
    for (const auto& row : rows) {
        std::vector<Rat> x;
        for (long long v : row) x.emplace_back(v);
        r.push_back(std::move(x));
    }
    return RatMatrix::from_rows(r);
}

LinearSubspace span_of(int ambient, const std::vector<std::vector<long long>>& rows) {
    return LinearSubspace::from_rows(ambient, dense(rows));
}

}  // namespace

TEST_CASE("rational parsing and formatting") {
    CHECK(rat_parse("3/6") == Rat(1, 2));
    CHECK(rat_parse("-4/2") == Rat(-2));
    CHECK(rat_str(rat_parse("-3/9")) == "-1/3");
    CHECK(rat_str(Rat(5)) == "5");
    CHECK_THROWS_AS(rat_parse("1/0"), parse_error);
    CHECK_THROWS_AS(rat_parse("x"), parse_error);
}

TEST_CASE("rref canonical form") {
    auto [r1, p1] = rref(dense({{2, 4}, {1, 2}}));
    CHECK(r1.rows() == 1);
    CHECK(r1.at(0, 0) == Rat(1));
    CHECK(r1.at(0, 1) == Rat(2));
    CHECK(p1 == std::vector<int>{0});

    auto [r2, p2] = rref(dense({{1, 0}, {0, 1}}));
    CHECK(r2 == RatMatrix::identity(2));
    CHECK(p2 == std::vector<int>{0, 1});

    // fractional entries: row2 = (2/3) row1
    RatMatrix m(2, 2);
    m.set_row(0, {{0, Rat(1, 2)}, {1, Rat(1, 3)}});
    m.set_row(1, {{0, Rat(1, 3)}, {1, Rat(2, 9)}});
    auto [r3, p3] = rref(m);
    CHECK(r3.rows() == 1);
    CHECK(r3.at(0, 1) == Rat(2, 3));
    CHECK(p3 == std::vector<int>{0});
}

TEST_CASE("rref is idempotent") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 25; ++trial) {
        int rows = 1 + static_cast<int>(rng() % 5), cols = 1 + static_cast<int>(rng() % 5);
        RatMatrix m(rows, cols);
        for (int i = 0; i < rows; ++i) {
            std::map<int, Rat> acc;
            for (int j = 0; j < cols; ++j) {
                long long v = static_cast<long long>(rng() % 7) - 3;
                if (v) acc[j] = Rat(v);
            }
            m.set_row(i, sv_from_map(acc));
        }
        auto [r, p] = rref(m);
        auto [r2, p2] = rref(r);
        CHECK(r == r2);
        CHECK(p == p2);
    }
}

TEST_CASE("kernel basics") {
    CHECK(kernel(RatMatrix(2, 3)).dim() == 3);
    CHECK(kernel(RatMatrix::identity(3)).dim() == 0);
    LinearSubspace k = kernel(dense({{1, 1, 0}, {0, 1, 1}}));
    REQUIRE(k.dim() == 1);
    CHECK(k.contains_vector({{0, Rat(1)}, {1, Rat(-1)}, {2, Rat(1)}}));
}

TEST_CASE("kernel vectors satisfy m v = 0 exactly") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        int rows = 1 + static_cast<int>(rng() % 4), cols = 1 + static_cast<int>(rng() % 6);
        RatMatrix m(rows, cols);
        for (int i = 0; i < rows; ++i) {
            std::map<int, Rat> acc;
            for (int j = 0; j < cols; ++j) {
                long long v = static_cast<long long>(rng() % 9) - 4;
                if (v) acc[j] = Rat(v, 1 + static_cast<long long>(rng() % 3));
            }
            m.set_row(i, sv_from_map(acc));
        }
        LinearSubspace k = kernel(m);
        for (int i = 0; i < k.dim(); ++i) CHECK(m.apply(k.basis().row(i)).empty());
        auto [r, p] = rref(m);
        CHECK(k.dim() == cols - r.rows());
    }
}

TEST_CASE("sum and intersection") {
    LinearSubspace u = span_of(2, {{1, 0}});
    LinearSubspace w = span_of(2, {{0, 1}});
    CHECK(subspace_sum(u, w) == LinearSubspace::full(2));
    CHECK(subspace_intersect(u, w).dim() == 0);

    LinearSubspace v = span_of(3, {{1, 1, 0}, {0, 0, 1}});
    CHECK(subspace_sum(v, v) == v);
    CHECK(subspace_intersect(v, v) == v);

    LinearSubspace a = span_of(3, {{1, 1, 0}, {0, 0, 1}});
    LinearSubspace b = span_of(3, {{0, 1, 1}, {1, 0, 0}});
    CHECK(subspace_sum(a, b).dim() == 3);
    CHECK(subspace_intersect(a, b).dim() == 1);

    LinearSubspace bad = span_of(2, {{1, 0}});
    CHECK_THROWS_AS(subspace_sum(v, bad), dimension_mismatch);
    CHECK_THROWS_AS(subspace_intersect(v, bad), dimension_mismatch);
}

TEST_CASE("Grassmann dimension identity on random subspaces") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 2 + static_cast<int>(rng() % 5);
        auto rand_sub = [&]() {
            int k = static_cast<int>(rng() % (n + 1));
            std::vector<SparseVec> vecs;
            for (int i = 0; i < k; ++i) {
                std::map<int, Rat> acc;
                for (int j = 0; j < n; ++j) {
                    long long v = static_cast<long long>(rng() % 5) - 2;
                    if (v) acc[j] = Rat(v);
                }
                vecs.push_back(sv_from_map(acc));
            }
            return LinearSubspace::from_vectors(n, vecs);
        };
        LinearSubspace u = rand_sub(), w = rand_sub();
        CHECK(u.dim() + w.dim() ==
              subspace_sum(u, w).dim() + subspace_intersect(u, w).dim());
    }
}

TEST_CASE("quotient dim and complement") {
    LinearSubspace q3 = LinearSubspace::full(3);
    CHECK(quotient_dim(q3, LinearSubspace(3)).dim == 3);
    CHECK(quotient_dim(q3, q3).dim == 0);
    LinearSubspace w = span_of(4, {{1, 1, 0, 0}, {0, 0, 1, 0}});
    QuotientResult q = quotient_dim(LinearSubspace::full(4), w);
    CHECK(q.dim == 2);
    CHECK(q.complement.size() == 2);
    // complement is deterministic: repeated runs agree
    QuotientResult q2 = quotient_dim(LinearSubspace::full(4), w);
    CHECK(q.complement == q2.complement);
    CHECK_THROWS_AS(quotient_dim(w, LinearSubspace::full(4)), containment_error);
}

TEST_CASE("direct sum check") {
    LinearSubspace e1 = span_of(2, {{1, 0}});
    LinearSubspace e2 = span_of(2, {{0, 1}});
    CHECK(is_direct_sum({e1, e2}, LinearSubspace::full(2)));
    CHECK_FALSE(is_direct_sum({e1, e1}, e1));
}

TEST_CASE("two-kernel intersection identity for rank-1 operator pairs") {
    // For rank-1 maps S, S' on U and T, T' on W:
    //   Ker(S(x)T) /\ Ker(S'(x)T') =
    //   (KerS /\ KerS')(x)W + KerS(x)KerT' + KerS'(x)KerT + U(x)(KerT /\ KerT')
    std::mt19937_64 rng(101);
    int checked = 0;
    while (checked < 100) {
        int nu = 2 + static_cast<int>(rng() % 3), nw = 2 + static_cast<int>(rng() % 3);
        auto rank1 = [&](int n) {
            // u * v^T as an n x n matrix
            std::vector<long long> u(n), v(n);
            for (auto& x : u) x = static_cast<long long>(rng() % 5) - 2;
            for (auto& x : v) x = static_cast<long long>(rng() % 5) - 2;
            RatMatrix m(n, n);
            for (int i = 0; i < n; ++i) {
                std::map<int, Rat> acc;
                for (int j = 0; j < n; ++j)
                    if (u[i] * v[j] != 0) acc[j] = Rat(u[i] * v[j]);
                m.set_row(i, sv_from_map(acc));
            }
            return m;
        };
        RatMatrix S = rank1(nu), Sp = rank1(nu), T = rank1(nw), Tp = rank1(nw);
        LinearSubspace lhs = subspace_intersect(kernel(S.kron(T)), kernel(Sp.kron(Tp)));
        LinearSubspace rhs = kron_subspace(subspace_intersect(kernel(S), kernel(Sp)),
                                           LinearSubspace::full(nw));
        rhs = subspace_sum(rhs, kron_subspace(kernel(S), kernel(Tp)));
        rhs = subspace_sum(rhs, kron_subspace(kernel(Sp), kernel(T)));
        rhs = subspace_sum(rhs, kron_subspace(LinearSubspace::full(nu),
                                              subspace_intersect(kernel(T), kernel(Tp))));
        REQUIRE(lhs == rhs);
        ++checked;
    }
}

TEST_CASE("matrix algebra") {
    RatMatrix a = dense({{1, 2}, {3, 4}});
    RatMatrix b = dense({{0, 1}, {1, 0}});
    CHECK(a.mul(b) == dense({{2, 1}, {4, 3}}));
    CHECK(a.transpose() == dense({{1, 3}, {2, 4}}));
    CHECK(a.plus(a, Rat(-1)).is_zero());
    CHECK(a.kron(b).rows() == 4);
    CHECK(a.kron(b).at(0, 1) == Rat(1));
    CHECK(image(dense({{1, 2}, {2, 4}})).dim() == 1);
    CHECK_THROWS_AS(a.mul(dense({{1, 2, 3}, {1, 2, 3}, {1, 2, 3}})), dimension_mismatch);
}
