#include <doctest.h>

#include "grmf/linalg.hpp"

#include <random>

using namespace grmf;

static RationalMatrix random_matrix(std::mt19937& rng, int r, int c, int lo, int hi)
{
    std::uniform_int_distribution<int> e(lo, hi);
    RationalMatrix A(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) {
            Rational q(e(rng), 1 + (e(rng) & 3));
            q.canonicalize();
            A.set(i, j, q);
        }
    return A;
}

// product of random r x k and k x c matrices has rank at most k
static RationalMatrix planted_rank(std::mt19937& rng, int r, int c, int k)
{
    return random_matrix(rng, r, k, -3, 3) * random_matrix(rng, k, c, -3, 3);
}

TEST_CASE("rank small cases")
{
    CHECK(rank(RationalMatrix::from_dense({{1, 2}, {2, 4}})) == 1);
    CHECK(rank(RationalMatrix::identity(7)) == 7);
    CHECK(rank(RationalMatrix(0, 5)) == 0);
    CHECK(rank(RationalMatrix(3, 3)) == 0);
}

TEST_CASE("rank agrees with naive elimination")
{
    std::mt19937 rng(11);
    for (int t = 0; t < 60; ++t) {
        auto A = planted_rank(rng, 6, 6, 3);
        CHECK(rank(A) == rank_naive(A));
        CHECK(rank(A) <= 3);
    }
    for (int t = 0; t < 5; ++t) {
        // large enough for the sparse path
        auto A = planted_rank(rng, 80, 70, 25);
        int r = rank(A);
        CHECK(r == rank_naive(A));
        CHECK(r == rank(A.transpose()));
    }
    std::uniform_int_distribution<int> dim(1, 9);
    for (int t = 0; t < 100; ++t) {
        auto A = random_matrix(rng, dim(rng), dim(rng), -1, 1);
        CHECK(rank(A) == rank_naive(A));
        CHECK(rank(A) == rank(A.transpose()));
    }
}

TEST_CASE("kernel and echelon")
{
    std::mt19937 rng(2);
    for (int t = 0; t < 40; ++t) {
        auto A = planted_rank(rng, 5, 8, 3);
        auto K = kernel(A);
        CHECK((int)K.size() == 8 - rank(A));
        for (auto& v : K) {
            auto z = A.apply(v);
            for (auto& x : z) CHECK(x == 0);
        }
        auto E = row_echelon(A);
        CHECK((int)E.pivots.size() == rank(A));
        for (size_t i = 0; i < E.rows.size(); ++i)
            for (size_t k = 0; k < E.rows.size(); ++k) {
                auto it = E.rows[k].find(E.pivots[i]);
                if (i == k) CHECK(it->second == 1);
                else CHECK(it == E.rows[k].end());
            }
    }
}

TEST_CASE("solve")
{
    auto s = solve(RationalMatrix::from_dense({{2}}), {1});
    REQUIRE(s.consistent);
    CHECK(s.x[0] == Rational(1, 2));
    auto z = solve(RationalMatrix(2, 2), {0, 1});
    CHECK_FALSE(z.consistent);
    REQUIRE(z.certificate.size() == 2);
    CHECK(z.certificate[1] != 0);

    std::mt19937 rng(9);
    for (int t = 0; t < 40; ++t) {
        auto A = planted_rank(rng, 6, 7, 4);
        auto x0 = random_matrix(rng, 7, 1, -4, 4).dense();
        RVec x(7);
        for (int i = 0; i < 7; ++i) x[i] = x0[i][0];
        RVec b = A.apply(x);
        auto r = solve(A, b);
        REQUIRE(r.consistent);
        CHECK(A.apply(r.x) == b);
        auto m = solve_min_norm(A, b);
        REQUIRE(m.has_value());
        CHECK(A.apply(*m) == b);
        // min norm solution is orthogonal to the kernel
        for (auto& k : kernel(A)) {
            Rational dot = 0;
            for (int i = 0; i < 7; ++i) dot += k[i] * (*m)[i];
            CHECK(dot == 0);
        }
        // perturb b off the column space: certificate y with yA = 0, yb != 0
        RVec b2 = b;
        b2[0] += 1;
        auto bad = solve(A, b2);
        if (!bad.consistent) {
            auto yA = A.transpose().apply(bad.certificate);
            for (auto& v : yA) CHECK(v == 0);
            Rational yb = 0;
            for (int i = 0; i < 6; ++i) yb += bad.certificate[i] * b2[i];
            CHECK(yb != 0);
        }
    }
    auto mn = solve_min_norm(RationalMatrix::from_dense({{1, 1}}), {1});
    CHECK(*mn == RVec{Rational(1, 2), Rational(1, 2)});
}

TEST_CASE("cohomology of finite complexes")
{
    FiniteComplex c{{1, 1}, {RationalMatrix::identity(1)}};
    CHECK(cohomology_dims(c) == std::vector<int>{0, 0});
    FiniteComplex one{{1}, {}};
    CHECK(cohomology_dims(one) == std::vector<int>{1});
    FiniteComplex bad{{1, 1, 1}, {RationalMatrix::identity(1), RationalMatrix::identity(1)}};
    CHECK_THROWS(cohomology_dims(bad));
}

TEST_CASE("euler characteristic is preserved")
{
    std::mt19937 rng(4);
    std::uniform_int_distribution<int> dim(0, 5);
    for (int t = 0; t < 50; ++t) {
        int n0 = dim(rng), n1 = dim(rng) + 1, n2 = dim(rng);
        auto d0 = random_matrix(rng, n1, n0, -2, 2);
        // rows of d1 annihilate the image of d0
        auto left = kernel(d0.transpose());
        RationalMatrix d1(n2, n1);
        std::uniform_int_distribution<int> e(-2, 2);
        for (int i = 0; i < n2; ++i)
            for (auto& v : left) {
                int s = e(rng);
                for (int j = 0; j < n1; ++j) d1.add(i, j, s * v[j]);
            }
        FiniteComplex c{{n0, n1, n2}, {d0, d1}};
        auto h = cohomology_dims(c);
        CHECK(n0 - n1 + n2 == h[0] - h[1] + h[2]);
        for (int x : h) CHECK(x >= 0);
    }
}
