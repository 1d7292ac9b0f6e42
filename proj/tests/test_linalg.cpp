#include "doctest.h"

#include <random>

#include "quiverhh/cochain.hpp"
#include "quiverhh/corpus.hpp"
#include "quiverhh/linalg.hpp"

using namespace quiverhh;

namespace {

SparseMatrix dense(const std::vector<std::vector<long>>& rows, const Field& f) {
    std::size_t r = rows.size(), c = r ? rows[0].size() : 0;
    SparseMatrix m(r, c);
    for (std::size_t j = 0; j < c; ++j) {
        std::vector<std::pair<std::size_t, Scalar>> col;
        for (std::size_t i = 0; i < r; ++i) col.push_back({i, f.from_int(rows[i][j])});
        m.set_column(j, make_sparse(col, f));
    }
    return m;
}

// Plain Gaussian elimination on a dense rational matrix; independent of the library.
std::size_t naive_rank(const SparseMatrix& m) {
    std::vector<std::vector<mpq_class>> a(m.rows(), std::vector<mpq_class>(m.cols()));
    for (std::size_t j = 0; j < m.cols(); ++j)
        for (const auto& [i, x] : m.column(j).entries) a[i][j] = x;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
        std::size_t piv = rank;
        while (piv < m.rows() && a[piv][col] == 0) ++piv;
        if (piv == m.rows()) continue;
        std::swap(a[piv], a[rank]);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == rank || a[i][col] == 0) continue;
            mpq_class factor = a[i][col] / a[rank][col];
            for (std::size_t j = col; j < m.cols(); ++j) a[i][j] -= factor * a[rank][j];
        }
        ++rank;
    }
    return rank;
}

SparseVector vec(std::vector<long> xs, const Field& f) {
    std::vector<std::pair<std::size_t, Scalar>> t;
    for (std::size_t i = 0; i < xs.size(); ++i) t.push_back({i, f.from_int(xs[i])});
    return make_sparse(t, f);
}

}  // namespace

TEST_CASE("field arithmetic") {
    Field q, f2(2), f3(3);
    CHECK(q.name() == "Q");
    CHECK(f2.name() == "GF(2)");
    CHECK(f3.from_int(-1) == 2);
    CHECK(f2.from_int(2) == 0);
    CHECK(f3.inv(f3.from_int(2)) == 2);
    CHECK(q.div(q.from_int(1), q.from_int(3)) == mpq_class(1, 3));
    CHECK(f3.canonical(mpq_class(1, 2)) == 2);
    CHECK(f2.sign(1) == 1);
    CHECK(q.sign(3) == -1);
    CHECK_THROWS_AS(Field(4), std::invalid_argument);
    CHECK_THROWS_AS(q.inv(q.zero()), std::domain_error);
    CHECK(is_prime(7));
    CHECK_FALSE(is_prime(1));
    CHECK(to_string(mpq_class(-3, 4)) == "-3/4");
}

TEST_CASE("rank") {
    for (std::uint32_t p : {0u, 2u, 3u}) {
        Field f(p);
        CHECK(rank(SparseMatrix(3, 4), f) == 0);
        CHECK(rank(dense({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, f), f) == 3);
    }
    // 1 - t on the two-element orbit: t swaps the basis vectors
    auto one_minus_t = [](const Field& f) { return dense({{1, -1}, {-1, 1}}, f); };
    CHECK(rank(one_minus_t(Field(0)), Field(0)) == 1);
    CHECK(rank(one_minus_t(Field(2)), Field(2)) == 1);
    Field f2(2);
    CHECK(rank(dense({{1, 1}, {1, -1}}, f2), f2) == 1);
    CHECK(rank(dense({{1, 1}, {1, -1}}, Field(0)), Field(0)) == 2);
}

TEST_CASE("kernel") {
    Field q;
    CHECK(kernel_basis(dense({{1, 0}, {0, 1}}, q), q).dim() == 0);
    Field f2(2);
    auto k = kernel_basis(dense({{1, 1}}, f2), f2);
    REQUIRE(k.dim() == 1);
    CHECK(k.rows()[0] == vec({1, 1}, f2));
    for (std::uint32_t p : {0u, 2u}) {
        Field f(p);
        auto kt = kernel_basis(dense({{1, -1}, {-1, 1}}, f), f);
        REQUIRE(kt.dim() == 1);
        CHECK(kt.rows()[0] == vec({1, 1}, f));
    }
}

TEST_CASE("reduction modulo a subspace") {
    Field q;
    std::vector<SparseVector> gens{vec({1, 2, 0}, q), vec({0, 1, 1}, q)};
    auto S = row_space(gens, 3, q);
    CHECK(S.dim() == 2);
    for (const auto& g : gens) CHECK(reduce_mod(S, g, q).empty());
    auto v = vec({3, 1, 4}, q);
    auto r = reduce_mod(S, v, q);
    CHECK(reduce_mod(S, r, q) == r);
    for (auto piv : S.pivots()) CHECK(r.at(piv) == 0);
    CHECK(reduce_mod(SubspaceBasis(3), v, q) == v);
    CHECK(S == row_space(std::vector<SparseVector>{vec({1, 3, 1}, q), vec({0, 1, 1}, q)}, 3, q));
}

TEST_CASE("fraction-free rank matches naive rational elimination") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> entry(-1, 1);
    Field q;
    for (int t = 0; t < 200; ++t) {
        std::size_t r = 1 + rng() % 7, c = 1 + rng() % 7;
        std::vector<std::vector<long>> rows(r, std::vector<long>(c));
        for (auto& row : rows)
            for (auto& x : row) x = entry(rng) * (1 + static_cast<long>(rng() % 3));
        auto m = dense(rows, q);
        auto rk = rank(m, q);
        CHECK(rk == naive_rank(m));
        CHECK(rk + kernel_basis(m, q).dim() == m.cols());
    }
    std::size_t compared = 0;
    for (const auto& bq : standard_corpus()) {
        for (std::size_t n = 1; n <= 4; ++n) {
            auto F = differential_matrix(bq, n, q);
            CHECK(rank(F, q) == naive_rank(F));
            ++compared;
        }
    }
    CHECK(compared > 0);
}

TEST_CASE("matrix products and transpose") {
    Field q;
    auto a = dense({{1, 2}, {0, 1}}, q);
    auto b = dense({{1, -2}, {0, 1}}, q);
    CHECK(a.multiply(b, q) == dense({{1, 0}, {0, 1}}, q));
    CHECK(a.transpose() == dense({{1, 0}, {2, 1}}, q));
    CHECK(a.apply(vec({1, 1}, q), q) == vec({3, 1}, q));
    CHECK(dense({{0, 0}}, q).is_zero());
}
