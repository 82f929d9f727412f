#include <doctest.h>

#include "grmf/orlov.hpp"
#include "grmf/sectors.hpp"
#include "support.hpp"

#include <functional>

using namespace grmf;
using namespace grmf::testing;

static WeightSequence ws(std::vector<Int> d) { return WeightSequence::make(std::move(d)); }

// a / m compared exactly: a1/m1 - a0/m0 == num/den
static bool ratio_step(Int a0, Int m0, Int a1, Int m1, Int num, Int den)
{
    return (a1 * m0 - a0 * m1) * den == num * m0 * m1;
}

static void each_sequence(int len, Int lo, Int hi, const std::function<void(const std::vector<Int>&)>& f)
{
    std::vector<Int> v(len, lo);
    while (true) {
        f(v);
        int i = len - 1;
        while (i >= 0 && v[i] == hi) --i;
        if (i < 0) return;
        ++v[i];
        for (int j = i + 1; j < len; ++j) v[j] = v[i];
    }
}

TEST_CASE("gorenstein degree and branch")
{
    CHECK(gorenstein_degree(ws({3, 3, 3})) == 0);
    CHECK(gorenstein_degree(ws({2, 3, 5})) == 1);
    CHECK(gorenstein_degree(ws({4, 4, 4})) == -1);
    CHECK(gorenstein_degree(ws({5, 5, 5, 5, 5})) == 0);
    CHECK(gorenstein_degree(ws({3, 3, 3, 3, 3, 3})) == 3);
    CHECK(orlov_classify(ws({3, 3, 3})).branch == Branch::CalabiYau);
    CHECK(orlov_classify(ws({2, 3, 5})).branch == Branch::Fano);
    CHECK(orlov_classify(ws({4, 4, 4})).branch == Branch::GeneralType);
    CHECK(branch_name(Branch::GeneralType) == "GeneralType");
    CHECK_THROWS(ws({0, 2}));
}

TEST_CASE("orlov report for Z-graded Fermat hypersurfaces")
{
    auto c = orlov_classify(z_graded_fermat({3, 3, 3, 3, 3, 3}));
    CHECK(c.a_degree == 3);
    CHECK(c.H_order == 1);
    CHECK(c.exceptional_count == 3);
    CHECK(c.side == "sheaf");
    CHECK(c.objects == std::vector<std::string>{"O", "O(1)", "O(2)"});

    auto q = orlov_classify(z_graded_fermat({5, 5, 5, 5, 5}));
    CHECK(q.a_degree == 0);
    CHECK(q.exceptional_count == 0);
    CHECK(q.side == "equivalence");

    auto g = orlov_classify(z_graded_fermat({4, 4, 4}));
    CHECK(g.a_degree == -1);
    CHECK(g.side == "module");
    CHECK(g.exceptional_count == 1);

    auto Z2 = AbelianGroup::free(2);
    auto R = GradedRing::make(Z2, {{"x", Z2->reduce({1, 0})}, {"y", Z2->reduce({0, 1})}});
    CHECK_THROWS_AS(orlov_classify(Potential::parse(R, "x*y")), std::domain_error);
}

TEST_CASE("weighted lines")
{
    auto r = orlov_classify(ws({2, 3, 3}));
    CHECK(r.a_degree == 1);
    CHECK(r.d_degree == 6);
    CHECK(r.dynkin == "D_4");
    auto e8 = orlov_classify(ws({2, 3, 5}));
    CHECK(e8.dynkin == "E_8");
    CHECK(e8.exceptional_count == 1);
    auto t = orlov_classify(ws({4, 4, 4}));
    CHECK(t.H_order == 16);
    CHECK(t.exceptional_count == 16);
    CHECK(!t.dynkin);
}

TEST_CASE("torsion from the group equals the weight combinatorics")
{
    for (int len = 1; len <= 4; ++len)
        each_sequence(len, 1, 6, [](const std::vector<Int>& d) {
            auto s = ws(d);
            auto r = orlov_classify(s);
            CHECK(r.H_order_combinatorial == r.H_order);
            CHECK(r.a_degree == gorenstein_degree(s));
            CHECK(r.d_degree == s.m);
            CHECK(r.exceptional_count == (r.a_degree < 0 ? -r.a_degree : r.a_degree) * r.H_order);
        });
}

TEST_CASE("appending weights shifts a/m exactly")
{
    each_sequence(3, 1, 6, [](const std::vector<Int>& d) {
        auto s = ws(d);
        auto one = d, two = d;
        one.push_back(1);
        two.push_back(2);
        CHECK(ratio_step(gorenstein_degree(s), s.m, gorenstein_degree(ws(one)), ws(one).m, 1, 1));
        CHECK(ratio_step(gorenstein_degree(s), s.m, gorenstein_degree(ws(two)), ws(two).m, 1, 2));
    });
}

TEST_CASE("quadratic augmentation raises a/m by 1/2 per square")
{
    for (auto w : {z_graded_fermat({3, 3, 3}), z_graded_fermat({4, 4, 4}), z_graded_fermat({2, 3, 7}),
                   maximally_graded_fermat({3, 3, 3})}) {
        auto r0 = orlov_classify(w);
        auto r1 = orlov_classify(knorrer_augment_single(w).w);
        auto r2 = orlov_classify(knorrer_augment(w).w);
        CHECK(ratio_step(r0.a_degree, r0.d_degree, r1.a_degree, r1.d_degree, 1, 2));
        CHECK(ratio_step(r0.a_degree, r0.d_degree, r2.a_degree, r2.d_degree, 1, 1));
        CHECK(r2.a_degree > 0);
    }
}

TEST_CASE("dynkin classification")
{
    CHECK(dynkin_classify(2, 2, 5).str() == "A_4");
    CHECK(dynkin_classify(2, 3, 3).str() == "D_4");
    CHECK(dynkin_classify(3, 2, 4).str() == "E_6");
    CHECK(dynkin_classify(5, 3, 2).str() == "E_8");
    CHECK(dynkin_classify(1, 2, 3).str() == "A_5");
    CHECK(dynkin_classify(2, 3, 5).rank == 8);
    CHECK_THROWS_AS(dynkin_classify(2, 3, 6), std::domain_error);
    CHECK_THROWS_AS(dynkin_classify(3, 3, 3), std::domain_error);
}

TEST_CASE("dynkin vertex counts equal HH_0 of the maximally graded potential")
{
    std::vector<std::vector<Int>> seqs{{2, 3, 3}, {2, 3, 4}, {2, 3, 5}, {2, 2, 3}, {2, 2, 4}, {2, 2, 5}};
    for (auto& d : seqs) {
        auto lbl = dynkin_classify(d[0], d[1], d[2]);
        CHECK(hh_table(maximally_graded_fermat(d), 0, 0).table.at(0, 0) == lbl.rank);
    }
}

TEST_CASE("lattice rank transfer")
{
    auto t = lattice_rank_transfer(25, 3, 1);
    CHECK(t.value == 22);
    CHECK(!t.inconsistent);
    CHECK(t.value == hh_table(z_graded_fermat({3, 3, 3, 3, 3, 3}), 0, 0).table.at(0, 0));
    CHECK(lattice_rank_transfer(24, 0, 1).value == 24);
    CHECK(lattice_rank_transfer(2, 3, 1).inconsistent);
    CHECK_THROWS(lattice_rank_transfer(5, -1, 1));
}

TEST_CASE("product decomposition counts")
{
    CHECK(product_decomposition_count({2, 3}) == std::vector<Int>{1, 2, 2, 1});
    CHECK(product_decomposition_count({1, 3}) == std::vector<Int>{1, 1, 1});
    CHECK(product_decomposition_count({2, 2, 2}) == std::vector<Int>{1, 3, 3, 1});
    CHECK(product_decomposition_count({}) == std::vector<Int>{1});
    CHECK_THROWS(product_decomposition_count({0}));
}

TEST_CASE("covers")
{
    auto M = AbelianGroup::from_invariants(1, {3});
    auto c = cover_report(M, {M->generator(1)});
    CHECK(c.cover_order == 3);
    CHECK(c.quotient->describe() == "Z");
    CHECK(cover_report(M, {}).cover_order == 1);
    CHECK_THROWS_AS(cover_report(M, {M->generator(0)}), std::domain_error);

    // Fermat partition covers: (d,..,d) in n + 1 variables split into m parts
    auto part_cover = [](Int d, const std::vector<int>& part_of) {
        auto w = maximally_graded_fermat(std::vector<Int>(part_of.size(), d));
        const auto& V = w.ring->variables();
        std::vector<GroupElement> L;
        for (size_t i = 0; i < V.size(); ++i)
            for (size_t j = i + 1; j < V.size(); ++j)
                if (part_of[i] == part_of[j]) L.push_back(w.group().sub(V[i].degree, V[j].degree));
        return cover_report(w.ring->group(), L).cover_order;
    };
    CHECK(part_cover(3, {0, 0, 1, 1}) == 9);
    CHECK(part_cover(4, {0, 0, 0}) == 16);
    CHECK(part_cover(5, {0, 1, 2}) == 1);
    CHECK(part_cover(3, {0, 0, 0, 1, 1}) == 27);
}
