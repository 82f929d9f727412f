#include <doctest.h>

#include "grmf/spectra.hpp"
#include "support.hpp"

#include <random>

using namespace grmf;
using namespace grmf::testing;

static WeightSequence ws(std::vector<Int> d) { return WeightSequence::make(std::move(d)); }

static std::vector<std::vector<Int>> part_weights(const PartitionReport& r)
{
    std::vector<std::vector<Int>> out;
    for (auto& p : r.parts) {
        auto w = p.weights;
        std::sort(w.begin(), w.end());
        out.push_back(w);
    }
    std::sort(out.begin(), out.end());
    return out;
}

static void check_covering(const PartitionReport& r, size_t n)
{
    std::vector<int> seen(n, 0);
    for (auto& p : r.parts)
        for (int i : p.indices) ++seen[i];
    for (int s : seen) CHECK(s == 1);
}

TEST_CASE("e values")
{
    CHECK(ade_e_value("A_4") == 5);
    CHECK(ade_e_value("D_4") == 4);
    CHECK(ade_e_value("E_8") == 8);
    CHECK(ade_e_value("A1") == 2);
    for (auto bad : {"E_9", "D_3", "B_2", "A_", "A_0", "A_2x", ""}) CHECK_THROWS_AS(ade_e_value(bad), std::invalid_argument);
}

TEST_CASE("admissible parts")
{
    CHECK(admissible_part({7}));
    CHECK(admissible_part({2, 2, 2}));
    CHECK(admissible_part({2, 2, 9}));
    CHECK(admissible_part({3, 3}));
    CHECK(admissible_part({2, 4, 3}));
    CHECK(admissible_part({5, 3, 2}));
    CHECK(!admissible_part({3, 6}));
    CHECK(!admissible_part({4, 4}));
    CHECK(!admissible_part({3, 3, 3}));
}

TEST_CASE("upper bounds with witnesses")
{
    auto e = fermat_upper_bound(ws({3, 3, 3}));
    REQUIRE(e);
    CHECK(e->score == 1);
    CHECK(part_weights(*e) == std::vector<std::vector<Int>>{{3}, {3, 3}});
    check_covering(*e, 3);

    auto big = fermat_upper_bound(ws({3, 3, 3, 3, 3, 3, 4, 4, 4, 4}));
    REQUIRE(big);
    CHECK(big->score == 4);
    CHECK(part_weights(*big) == std::vector<std::vector<Int>>{{3, 3}, {3, 4}, {3, 4}, {3, 4}, {3, 4}});
    check_covering(*big, 10);
    for (auto& p : big->parts) CHECK(p.admissible);

    // (2, d_1..d_n) with sum 1/d_i <= 1/2
    for (auto d : std::vector<std::vector<Int>>{{2, 3, 7, 42}, {2, 4, 4}, {2, 6, 6, 6}, {2, 5, 5, 10}, {2, 8, 8, 8, 8}}) {
        const Int n = (Int)d.size() - 1;
        auto b = fermat_bounds(ws(d));
        CHECK(b.upper == n - 1);
        CHECK(b.lower == n - 1);
        CHECK(b.verdict == "determined");
    }
}

TEST_CASE("lower bounds")
{
    auto e = fermat_lower_bound(ws({3, 3, 3}));
    CHECK(e.score == 1);
    CHECK(fermat_lower_bound(ws({5, 5, 5, 5, 5})).score == 3);
    CHECK(fermat_bounds(ws({2, 2})).lower == 0);
    auto big = fermat_lower_bound(ws({3, 3, 3, 3, 3, 3, 4, 4, 4, 4}));
    CHECK(big.score == 4);
    check_covering(big, 10);
    // a lone quadric scores -1 before the clamp
    auto q = fermat_bounds(ws({2}));
    CHECK(q.lower_raw == -1);
    CHECK(q.lower == 0);
    CHECK(q.upper == 0);
    CHECK(!q.hypotheses.empty());
}

TEST_CASE("fermat bounds for the worked sequences")
{
    auto a = fermat_bounds(ws({3, 3, 3}));
    CHECK(a.lower == 1);
    CHECK(a.upper == 1);
    CHECK(a.verdict == "determined");
    auto b = fermat_bounds(ws({3, 3, 3, 3, 3, 3, 4, 4, 4, 4}));
    CHECK(b.lower == 4);
    CHECK(b.upper == 4);
    CHECK(b.verdict == "determined");
    auto c = fermat_bounds(ws({3, 3, 3, 3}));
    CHECK(c.verdict == "open");
}

TEST_CASE("multiset search agrees with labelled set partitions")
{
    // every multiset of length <= 7 with entries in [1, 6]
    for (int len = 1; len <= 7; ++len) {
        std::vector<Int> v(len, 1);
        while (true) {
            auto s = ws(v);
            auto up = fermat_upper_bound(s);
            auto ub = fermat_upper_bound_bruteforce(s);
            REQUIRE(up.has_value() == ub.has_value());
            if (up) CHECK(up->score == *ub);
            CHECK(fermat_lower_bound(s).score == fermat_lower_bound_bruteforce(s));
            int i = len - 1;
            while (i >= 0 && v[i] == 6) --i;
            if (i < 0) break;
            ++v[i];
            for (int j = i + 1; j < len; ++j) v[j] = v[i];
        }
    }
}

TEST_CASE("lower bound never exceeds upper bound")
{
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> len(1, 8), ent(2, 6);
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<Int> d(len(rng));
        for (auto& x : d) x = ent(rng);
        auto b = fermat_bounds(ws(d));
        REQUIRE(b.upper);
        CHECK(*b.lower <= *b.upper);
        check_covering(*b.upper_witness, d.size());
        check_covering(*b.lower_witness, d.size());
    }
}

TEST_CASE("minimizing sequences")
{
    CHECK(minimizing_test(ws({2, 6, 6, 6})));
    CHECK(minimizing_test(ws({2, 3})));
    // nonpositive and contains {3,3}
    CHECK(minimizing_test(ws({3, 3, 3})));
    CHECK(!minimizing_test(ws({4, 4, 4})));
    CHECK(!minimizing_test(ws({2, 2, 2})));
    CHECK(minimizing_test(ws({3, 3})));
    CHECK(!minimizing_test(ws({3, 3, 3, 3})));
    // minimizing forces both bounds to length - 2
    for (int len = 2; len <= 6; ++len) {
        std::vector<Int> v(len, 2);
        while (true) {
            auto s = ws(v);
            if (minimizing_test(s)) {
                auto b = fermat_bounds(s);
                CHECK(b.upper == len - 2);
                CHECK(b.lower == len - 2);
            }
            int i = len - 1;
            while (i >= 0 && v[i] == 7) --i;
            if (i < 0) break;
            ++v[i];
            for (int j = i + 1; j < len; ++j) v[j] = v[i];
        }
    }
}

TEST_CASE("ADE tensor bounds")
{
    auto a = ade_tensor_bounds({"A_2", "A_2", "A_2"});
    CHECK(a.lower == 1);
    CHECK(a.upper == 2);
    auto one = ade_tensor_bounds({"A_7"});
    CHECK(one.lower == 0);
    CHECK(one.upper == 0);
    std::vector<std::string> mix(6, "A_2");
    for (int i = 0; i < 4; ++i) mix.push_back("A_3");
    CHECK(ade_tensor_bounds(mix).lower == 4);
    CHECK_THROWS(ade_tensor_bounds({}));
}

TEST_CASE("Noether-Lefschetz floor")
{
    CHECK(nl_floor(2, 3, 1) == 1);
    CHECK(nl_floor(3, 5, 1) == 6);
    CHECK(nl_floor(3, 5, 7) == 0);
    CHECK(nl_floor(2, 3, 2) == 0);
    CHECK_THROWS(nl_floor(2, 3, 0));
}

TEST_CASE("Noether-Lefschetz dimension of a principal ideal")
{
    auto w = z_graded_fermat({3, 3, 3});
    auto R = w.ring;
    auto p = R->parse("x0 + x1 + x2");
    auto zero = GradedIdealSpec::make(R, {});
    auto I2 = monomial_ideal(R, zdeg(w, 2));
    auto a = nl_dimension_principal(w, p, I2);
    CHECK(a.value == 1);
    CHECK(a.value == nl_floor(2, 3, 1));
    auto b = nl_dimension_principal(w, p, zero);
    CHECK(b.order == 4);
    CHECK(b.value == 3);
    auto c = nl_dimension_principal(w, R->parse("x0^2"), zero);
    CHECK(c.value == 0);
    CHECK(c.degenerate);
    // enlarging I never increases the value
    auto I1 = monomial_ideal(R, zdeg(w, 1));
    auto Ix = GradedIdealSpec::make(R, {R->parse("x0 * x1")});
    int prev = b.value;
    for (auto& I : {Ix, Ix + I2, I2, I1}) {
        int v = nl_dimension_principal(w, p, I).value;
        CHECK(v <= prev);
        prev = v;
    }
    CHECK_THROWS(nl_dimension_principal(w, p, zero, 2));
}
