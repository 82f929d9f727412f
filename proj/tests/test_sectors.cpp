#include <doctest.h>

#include "grmf/sectors.hpp"
#include "support.hpp"

using namespace grmf;
using namespace grmf::testing;

static Potential xd(int d) { return Potential::parse(z_ring({"x"}, {1}), "x^" + std::to_string(d)); }

static int twisted_count(const std::vector<SectorData>& S)
{
    int c = 0;
    for (auto& s : S) c += !s.g.is_trivial();
    return c;
}

TEST_CASE("sector enumeration")
{
    for (int d = 2; d <= 6; ++d) {
        auto S = enumerate_sectors(xd(d));
        REQUIRE(S.size() == (size_t)d);
        for (auto& s : S) {
            if (s.g.is_trivial()) {
                CHECK(s.n_g == 1);
                CHECK(s.c_g == 0);
            } else {
                CHECK(s.n_g == 0);
                CHECK(s.c_g == 1);
                CHECK(s.v_g == zdeg(xd(d), -1));
            }
        }
    }
    auto cubic = z_graded_fermat({3, 3, 3, 3, 3, 3});
    auto S = enumerate_sectors(cubic);
    CHECK(S.size() == 3);
    CHECK(twisted_count(S) == 2);
    for (auto& s : S)
        if (!s.g.is_trivial()) CHECK(s.c_g == 6);

    // x has degree 1 and d = 1: M/(d) = 0
    auto lin = Potential::parse(z_ring({"x", "y"}, {1, 1}), "x + y");
    auto one = enumerate_sectors(lin);
    REQUIRE(one.size() == 1);
    CHECK(one[0].n_g == 2);
    CHECK(one[0].c_g == 0);

    auto Z2 = AbelianGroup::free(2);
    auto R = GradedRing::make(Z2, {{"x", Z2->reduce({1, 0})}, {"y", Z2->reduce({0, 1})}});
    CHECK_THROWS_AS(enumerate_sectors(Potential::parse(R, "x*y")), std::domain_error);
}

TEST_CASE("rhom of x^d: the identity sector gives the Jacobian line")
{
    for (int d = 2; d <= 6; ++d) {
        auto w = xd(d);
        auto T = rhom_table(w, zrange(w, -d, d), -4, 4);
        CHECK(T.at(T.find(zdeg(w, 0)), 0) == 1);
        for (int t = -4; t <= 4; ++t)
            if (t != 0) CHECK(T.at(T.find(zdeg(w, 0)), t) == 0);
        // Jac(x^d) = k[x]/(x^{d-1}) sits in degrees 0..d-2 of the t = 0 column
        for (int m = 0; m <= d; ++m) CHECK(T.at(T.find(zdeg(w, m)), 0) == (m <= d - 2 ? 1 : 0));
        // periodicity: (m, t+2) = (m + d, t)
        for (int m = -d; m <= 0; ++m)
            for (int t = -4; t <= 2; ++t) CHECK(T.at(T.find(zdeg(w, m)), t + 2) == T.at(T.find(zdeg(w, m + d)), t));
    }
    auto w = xd(3);
    auto S = enumerate_sectors(w);
    for (int m = -30; m <= -10; ++m)
        for (int t = -2; t <= 2; ++t) CHECK(rhom_cell(S, w, zdeg(w, m), t) == 0);
}

TEST_CASE("hh of x^d is k^{d-1} in degree 0")
{
    for (int d = 2; d <= 6; ++d) {
        auto r = hh_table(xd(d), -4, 4);
        for (int i = -4; i <= 4; ++i) CHECK(r.table.at(0, i) == (i == 0 ? d - 1 : 0));
        CHECK(r.warnings.empty());
    }
}

TEST_CASE("elliptic and cubic fourfold hh")
{
    auto e = hh_table(z_graded_fermat({3, 3, 3}), -4, 4);
    for (int i = -4; i <= 4; ++i) CHECK(e.table.at(0, i) == (i == 0 ? 2 : (i == 1 || i == -1) ? 1 : 0));
    auto c = hh_table(z_graded_fermat({3, 3, 3, 3, 3, 3}), -2, 2);
    CHECK(c.table.at(0, 0) == 22);
    CHECK(c.table.at(0, 2) == 1);
    CHECK(c.table.at(0, -2) == 1);
}

TEST_CASE("maximally graded ADE potentials")
{
    CHECK(hh_table(maximally_graded_fermat({2, 3, 3}), 0, 0).table.at(0, 0) == 4);
    CHECK(hh_table(maximally_graded_fermat({2, 3, 4}), 0, 0).table.at(0, 0) == 6);
    CHECK(hh_table(maximally_graded_fermat({2, 3, 5}), 0, 0).table.at(0, 0) == 8);
}

TEST_CASE("hh parity reindexing")
{
    // HH_i of a sector at slice mu equals HH_{i-2} at mu + d
    auto w = z_graded_fermat({3, 3, 4});
    auto S = enumerate_sectors(w);
    const AbelianGroup& M = w.group();
    for (auto& s : S)
        for (int i = -3; i <= 5; ++i) {
            if (((i - s.n_g) % 2 + 2) % 2) continue;
            const Int l = floor_div(i, 2);
            GroupElement mu = M.sub(M.scale(s.q_g - l, w.d), s.d_g);
            CHECK(hh_sector_dim(s, w, i) == jacobian_slice_dim(s.w_g, mu));
            CHECK(hh_sector_dim(s, w, i - 2) == jacobian_slice_dim(s.w_g, M.add(mu, w.d)));
        }
}

TEST_CASE("twisted sectors at the Serre cell")
{
    for (int d : {3, 4}) {
        auto w = z_graded_fermat(std::vector<Int>(d, d));
        auto S = enumerate_sectors(w);
        auto [m, t] = serre_cell(w);
        auto per = rhom_cell_by_sector(S, w, m, t);
        int twisted = 0;
        for (size_t k = 0; k < S.size(); ++k)
            if (!S[k].g.is_trivial()) twisted += per[k];
        CHECK(twisted == d - 1);
    }
}

TEST_CASE("cross-oracle: sector formula equals the brute-force complex")
{
    std::vector<Potential> cases{xd(3), xd(4), Potential::parse(z_ring({"x", "y"}, {3, 2}), "x^2 + y^3")};
    auto y3 = Potential::parse(z_ring({"y"}, {1}), "y^3");
    cases.push_back(tensor_ring(xd(3), y3, 1));
    for (auto& w : cases) {
        auto S = enumerate_sectors(w);
        const Int Wd = w.ring->witness_of(w.d);
        std::vector<GroupElement> ms;
        if (w.group().free_rank() == 1 && w.group().torsion().empty()) {
            ms = zrange(w, -Wd, 2 * Wd);
        } else {
            // every degree with witness in [-Wd, 2 Wd]: generated by variable degrees and their negatives
            for (auto& [deg, monos] : monomials_by_degree(*w.ring, 0, 3 * Wd)) ms.push_back(w.group().sub(deg, w.d));
        }
        auto brute = hh_bruteforce(w, ms, -4, 4);
        auto closed = rhom_table(w, ms, -4, 4);
        CHECK(brute == closed);
        int nonzero = 0;
        for (auto& row : closed.dims)
            for (int v : row) nonzero += v != 0;
        CHECK(nonzero > 0);
    }
}

TEST_CASE("support range")
{
    for (auto w : {xd(3), z_graded_fermat({3, 3, 3}), z_graded_fermat({2, 4})}) {
        auto S = enumerate_sectors(w);
        for (Int k = -4; k <= 4; ++k) {
            auto m = zdeg(w, k);
            auto r = rhom_support(S, w, m);
            REQUIRE(r.has_value());
            auto [lo, hi] = *r;
            if (lo > hi) continue;
            for (int t : {lo - 2, lo - 1, hi + 1, hi + 2}) CHECK(rhom_cell(S, w, m, t) == 0);
            int inside = 0;
            for (int t = lo; t <= hi; ++t) inside += rhom_cell(S, w, m, t);
            CHECK(inside > 0);
        }
    }
}

TEST_CASE("twist action")
{
    auto w = xd(3);
    auto S = enumerate_sectors(w);
    for (auto& q : twist_action(S, w, zdeg(w, 0))) CHECK(q.is_zero());
    for (auto& q : twist_action(S, w, zdeg(w, 3))) CHECK(q.is_zero());
    auto a = twist_action(S, w, zdeg(w, 1));
    std::vector<QZ> twisted;
    for (size_t k = 0; k < S.size(); ++k)
        if (!S[k].g.is_trivial()) twisted.push_back(a[k]);
    REQUIRE(twisted.size() == 2);
    // {-1/3, -2/3} = {2/3, 1/3} in Q/Z
    std::sort(twisted.begin(), twisted.end());
    CHECK(twisted[0] == QZ::make(-2, 3));
    CHECK(twisted[1] == QZ::make(-1, 3));
}

TEST_CASE("restriction and induction")
{
    auto w = xd(3);
    auto S = enumerate_sectors(w);
    auto id = res_ind_analysis(S, w, GroupHom::identity(w.ring->group()));
    CHECK(id.kernel_order == 1);
    for (size_t k = 0; k < S.size(); ++k) {
        CHECK(id.in_G_prime[k]);
        CHECK(id.scalar[k] == 1);
    }

    auto y3 = Potential::parse(z_ring({"y"}, {1}), "y^3");
    auto T = tensor_ring(w, y3, 1);
    GroupPtr M = T.ring->group();
    REQUIRE(M->describe() == "Z ⊕ Z/3");
    auto Z = AbelianGroup::free(1);
    // (a, b) -> a + b kills the relation (3, -3)
    GroupHom pi(M, Z, {{1, 1}});
    REQUIRE(pi.well_defined());
    auto ST = enumerate_sectors(T);
    auto r = res_ind_analysis(ST, T, pi);
    CHECK(r.kernel_order == 3);
    int flagged = 0;
    for (size_t k = 0; k < ST.size(); ++k) {
        CHECK(r.scalar[k] == (r.in_G_prime[k] ? 3 : 0));
        flagged += r.in_G_prime[k];
    }
    CHECK(flagged == 3); // characters of Z/(3)

    // kernel Z/2
    auto G = AbelianGroup::from_invariants(1, {2});
    auto R = GradedRing::make(G, {{"x", G->reduce({1, 0})}, {"y", G->reduce({1, 1})}});
    auto v = Potential::parse(R, "x^2 + y^2");
    auto SV = enumerate_sectors(v);
    CHECK(SV.size() == 4);
    GroupHom forget(R->group(), Z, {{1, 0}});
    REQUIRE(forget.well_defined());
    auto f = res_ind_analysis(SV, v, forget);
    CHECK(f.kernel_order == 2);
    std::vector<Int> sc = f.scalar;
    std::sort(sc.begin(), sc.end());
    CHECK(sc == std::vector<Int>{0, 0, 2, 2});
    GroupHom collapse(M, Z, {{0, 0}});
    CHECK_THROWS_AS(res_ind_analysis(ST, T, collapse), std::domain_error);
}
