#include <doctest.h>

#include "support.hpp"

using namespace grmf;
using namespace grmf::testing;

static Potential xd(int d) { return Potential::parse(z_ring({"x"}, {1}), "x^" + std::to_string(d)); }

static Factorization stab_residue(const Potential& w, int d)
{
    return rank_one(w, w.ring->var(0), w.ring->var(0).pow(d - 1));
}

TEST_CASE("validate: rank one, perturbed degree, bad composition")
{
    for (int d = 2; d <= 5; ++d) {
        auto w = xd(d);
        auto F = stab_residue(w, d);
        CHECK(validate(F).ok);
        CHECK(F.E_minus1.degrees[0] == zdeg(w, -1));
        F.E_minus1.degrees[0] = zdeg(w, -2);
        auto r = validate(F);
        CHECK_FALSE(r.ok);
        CHECK(r.kind == "degree");
    }
    auto w = xd(3);
    auto bad = rank_one(w, w.ring->var(0), w.ring->var(0).pow(2).scaled(2));
    auto r = validate(bad);
    CHECK_FALSE(r.ok);
    CHECK(r.kind == "composition");
    CHECK(r.message.find("expected x^3") != std::string::npos);
    auto shape = stab_residue(w, 3);
    shape.phi_0 = PolyMatrix(2, 1, 1);
    CHECK(validate(shape).kind == "shape");
}

TEST_CASE("diagonal of x^d - y^d: cyclic d x d blocks")
{
    for (int d = 2; d <= 5; ++d) {
        auto w = xd(d);
        auto D = diagonal(w);
        CHECK(validate(D.F).ok);
        CHECK(D.F.E_0.rank() == d);
        CHECK(D.F.E_minus1.rank() == d);
        // every entry of phi_0 is a monomial x or y (the cyclic pattern)
        int nonzero = 0;
        for (auto& p : D.F.phi_0.data)
            if (!p.is_zero()) {
                ++nonzero;
                CHECK(p.size() == 1);
            }
        CHECK(nonzero == 2 * d);
        const AbelianGroup& G = D.F.w.group();
        D.F.E_0.degrees[1] = G.add(D.F.E_0.degrees[1], D.F.w.d);
        CHECK(validate(D.F).kind == "degree");
    }
}

TEST_CASE("telescoping differences")
{
    auto w = xd(3);
    auto D = diagonal(w);
    const GradedRing& T = *D.F.w.ring;
    CHECK(D.Delta[0] == T.parse("x^2 + x*x_2 + x_2^2"));
    CHECK(D.Delta[0].size() == 3);

    auto R = z_ring({"x", "y", "z"}, {1, 1, 1});
    auto v = Potential::parse(R, "x^2*y + y^3 - 2*x*y*z + z^3");
    Potential Tv = tensor_ring(v, v, -1);
    auto Dv = telescoping_differences(v, Tv);
    Polynomial sum(6);
    for (int i = 0; i < 3; ++i) sum += Dv[i] * (Tv.ring->var(i) - Tv.ring->var(3 + i));
    CHECK(sum == -Tv.w);
}

TEST_CASE("diagonal of x^2 + y^2 has rank 4")
{
    auto w = Potential::parse(z_ring({"x", "y"}, {1, 1}), "x^2 + y^2");
    auto D = diagonal(w);
    CHECK(D.F.E_0.rank() == 4);
    CHECK(D.F.E_minus1.rank() == 4);
    CHECK(validate(D.F).ok);
    CHECK(validate(dual(D.F)).ok);
    CHECK(validate(shift(D.F)).ok);
}

TEST_CASE("diagonal needs finite M/(d)")
{
    auto Z2 = AbelianGroup::free(2);
    auto R = GradedRing::make(Z2, {{"x", Z2->reduce({1, 0})}, {"y", Z2->reduce({0, 1})}});
    auto w = Potential::parse(R, "x*y");
    CHECK_THROWS_AS(diagonal(w), std::invalid_argument);
}

TEST_CASE("shift and twist")
{
    std::mt19937 rng(5);
    auto w = xd(4);
    auto F = stab_residue(w, 4);
    CHECK(shift(shift(F)) == twist(F, w.d));
    CHECK(twist(F, zdeg(w, 0)) == F);
    auto D = diagonal(xd(3)).F;
    CHECK(validate(shift(D)).ok);
    CHECK(shift(shift(D)) == twist(D, D.w.d));
    auto v = z_graded_fermat({3, 4});
    for (int t = 0; t < 10; ++t) {
        auto G = random_fermat_factorization(rng, v, {3, 4});
        CHECK(validate(G).ok);
        CHECK(validate(shift(G)).ok);
        CHECK(shift(shift(G)) == twist(G, v.d));
    }
}

TEST_CASE("cone")
{
    auto w = xd(3);
    auto E = stab_residue(w, 3);
    auto C = cone(E, E, identity_morphism(E));
    CHECK(validate(C.C).ok);
    auto h = null_homotopy(C.C, w.ring->one());
    CHECK(h.null_homotopic);
    CHECK(h.verified);

    auto F = twist(E, zdeg(w, 2));
    auto z = cone(E, F, zero_morphism(E, F));
    CHECK(z.C == direct_sum(shift(E), F));

    auto E1 = twist(E, zdeg(w, 1));
    Morphism x{PolyMatrix(1, 1, 1), PolyMatrix(1, 1, 1)};
    x.f_minus1(0, 0) = w.ring->var(0);
    x.f_0(0, 0) = w.ring->var(0);
    REQUIRE(has_degree_zero(E, E1, x));
    REQUIRE(is_closed(E, E1, x));
    auto cx = cone(E, E1, x);
    CHECK(validate(cx.C).ok);
    CHECK(cx.C.E_0.rank() == 2);

    Morphism bad = x;
    bad.f_0(0, 0) = w.ring->zero();
    CHECK_THROWS_AS(cone(E, E1, bad), std::invalid_argument);
}

TEST_CASE("cone triangle maps are closed and compose to a boundary")
{
    std::mt19937 rng(17);
    auto w = z_graded_fermat({3, 3});
    for (int t = 0; t < 6; ++t) {
        auto E = random_fermat_factorization(rng, w, {3, 3});
        auto F = random_fermat_factorization(rng, w, {3, 3});
        // a closed map: phi^F-compatible maps are found as cocycles in Hom^0_0
        auto zero = w.group().zero();
        HomSpace H = hom_space(E, F, zero, 0), H1 = hom_space(E, F, zero, 1);
        auto Z = kernel(hom_differential(E, F, H, H1));
        Morphism f = zero_morphism(E, F);
        if (!Z.empty()) {
            auto [a, b] = hom_element(H, Z[0], w.ring->nvars());
            f = {a, b};
        }
        REQUIRE(is_closed(E, F, f));
        auto c = cone(E, F, f);
        CHECK(validate(c.C).ok);
        CHECK(is_closed(F, c.C, c.incl));
        auto E1 = shift(E);
        CHECK(is_closed(c.C, E1, c.proj));
        CHECK(has_degree_zero(F, c.C, c.incl));
        CHECK(has_degree_zero(c.C, E1, c.proj));
        Morphism comp = compose(c.proj, c.incl, w.ring->nvars());
        CHECK(is_null_homotopic_morphism(F, E1, comp));
    }
}

TEST_CASE("box product")
{
    auto A = xd(3);
    auto B = Potential::parse(z_ring({"y"}, {1}), "y^3");
    auto E = stab_residue(A, 3), F = stab_residue(B, 3);
    auto X = box(E, F);
    CHECK(validate(X).ok);
    CHECK(X.E_0.rank() == 2);
    CHECK(X.E_minus1.rank() == 2);
    CHECK(X.w.group().describe() == "Z ⊕ Z/3");

    auto contractible = rank_one(B, B.ring->one(), B.w);
    auto Y = box(E, contractible);
    CHECK(validate(Y).ok);
    auto h = null_homotopy(Y, Y.w.ring->one());
    CHECK(h.null_homotopic);
    CHECK(h.verified);

    auto P = cokernel_presentation(X);
    CHECK(P.matrix.rows == 2);
    CHECK(P.matrix.cols == 2);
}

TEST_CASE("box Hom-Kunneth dimension identity")
{
    auto A = xd(3);
    auto B = Potential::parse(z_ring({"y"}, {1}), "y^4");
    std::vector<Factorization> Xs{stab_residue(A, 3), rank_one(A, A.ring->var(0).pow(2), A.ring->var(0))};
    std::vector<Factorization> Ys{stab_residue(B, 4), rank_one(B, B.ring->var(0).pow(2), B.ring->var(0).pow(2))};
    Potential T = tensor_ring(A, B, 1);
    const BoxMinus& bm = T.ring->tensor->grading;
    const Int d = 3, e = 4;
    for (auto& X1 : Xs)
        for (auto& X2 : Xs)
            for (auto& Y1 : Ys)
                for (auto& Y2 : Ys) {
                    auto L = box(X1, Y1, T), R = box(X2, Y2, T);
                    for (Int m = -2; m <= 3; ++m)
                        for (Int n = -1; n <= 1; ++n) {
                            auto lhs = hom_cohomology(L, R, bm.pi(zdeg(A, m), zdeg(B, n)), -1, 1);
                            for (int Tdeg = -1; Tdeg <= 1; ++Tdeg) {
                                long rhs = 0;
                                for (int a = 0; a <= 1; ++a)
                                    for (Int k = -4; k <= 4; ++k) {
                                        auto hx = hom_cohomology(X1, X2, zdeg(A, m + k * d), a, a)[0];
                                        if (!hx) continue;
                                        rhs += (long)hx * hom_cohomology(Y1, Y2, zdeg(B, n - k * e), Tdeg - a, Tdeg - a)[0];
                                    }
                                CHECK(lhs[Tdeg + 1] == rhs);
                            }
                        }
                }
}

TEST_CASE("dual")
{
    auto w = xd(3);
    auto F = rank_one(w, w.ring->var(0), w.ring->var(0).pow(2));
    auto D = dual(F);
    CHECK(validate(D).ok);
    CHECK(D.w.w == -w.w);
    CHECK(dual(twist(F, zdeg(w, 2))) == twist(D, zdeg(w, -2)));
    CHECK(dual(dual(F)) == negate_maps(F));
    auto Dg = dual(diagonal(xd(4)).F);
    CHECK(validate(Dg).ok);

    std::mt19937 rng(3);
    auto v = z_graded_fermat({2, 3, 3});
    for (int t = 0; t < 8; ++t) {
        auto G = random_fermat_factorization(rng, v, {2, 3, 3});
        CHECK(validate(dual(G)).ok);
        CHECK(dual(dual(G)) == negate_maps(G));
    }
}

TEST_CASE("hom cohomology basics")
{
    for (int d = 2; d <= 5; ++d) {
        auto w = xd(d);
        auto E = stab_residue(w, d);
        CHECK(hom_cohomology(E, E, zdeg(w, 0), 0, 0)[0] == 1);
        auto C = rank_one(w, w.ring->one(), w.w);
        for (Int m = -3; m <= 3; ++m)
            for (int h : hom_cohomology(C, E, zdeg(w, m), -2, 2)) CHECK(h == 0);
    }
}

TEST_CASE("hom periodicity: (m, t+2) matches (m + d, t)")
{
    std::mt19937 rng(8);
    auto w = z_graded_fermat({3, 4});
    for (int it = 0; it < 3; ++it) {
        auto E = random_fermat_factorization(rng, w, {3, 4});
        auto F = random_fermat_factorization(rng, w, {3, 4});
        const Int d = w.d.c[0];
        for (Int m = -4; m <= 6; ++m) {
            auto a = hom_cohomology(E, F, zdeg(w, m), 0, 1);
            auto b = hom_cohomology(E, F, zdeg(w, m - d), 2, 3);
            CHECK(a == b);
        }
    }
}

TEST_CASE("hom cohomology is invariant under a simultaneous twist")
{
    std::mt19937 rng(21);
    auto w = z_graded_fermat({2, 3});
    for (int it = 0; it < 4; ++it) {
        auto E = random_fermat_factorization(rng, w, {2, 3});
        auto F = random_fermat_factorization(rng, w, {2, 3});
        auto s = zdeg(w, 1 + it);
        auto ms = zrange(w, -3, 8);
        CHECK(hom_table(E, F, ms, -2, 2) == hom_table(twist(E, s), twist(F, s), ms, -2, 2));
    }
}

TEST_CASE("hom differential squares to zero")
{
    std::mt19937 rng(12);
    auto w = z_graded_fermat({3, 3, 2});
    auto E = random_fermat_factorization(rng, w, {3, 3, 2}, 5);
    auto F = random_fermat_factorization(rng, w, {3, 3, 2}, 5);
    for (Int m = -2; m <= 4; ++m)
        for (int t = -1; t <= 1; ++t) {
            auto a = hom_space(E, F, zdeg(w, m), t), b = hom_space(E, F, zdeg(w, m), t + 1),
                 c = hom_space(E, F, zdeg(w, m), t + 2);
            CHECK((hom_differential(E, F, b, c) * hom_differential(E, F, a, b)).is_zero());
        }
}

TEST_CASE("totalize")
{
    auto w = xd(3);
    auto E = stab_residue(w, 3);
    auto F = twist(E, zdeg(w, 1));
    Morphism x{PolyMatrix(1, 1, 1), PolyMatrix(1, 1, 1)};
    x.f_minus1(0, 0) = w.ring->var(0);
    x.f_0(0, 0) = w.ring->var(0);
    CHECK(totalize({F, E}, {x}) == cone(E, F, x).C);

    auto G = twist(E, zdeg(w, 2));
    auto T0 = totalize({G, F, E}, {zero_morphism(F, G), zero_morphism(E, F)});
    CHECK(T0 == direct_sum(direct_sum(shift(shift(E)), shift(F)), G));
    CHECK(validate(T0).ok);

    // E -> E ⊕ F -> F: inclusion then projection
    auto S = direct_sum(E, F);
    Morphism inc{PolyMatrix(2, 1, 1), PolyMatrix(2, 1, 1)}, pr{PolyMatrix(1, 2, 1), PolyMatrix(1, 2, 1)};
    inc.f_minus1(0, 0) = inc.f_0(0, 0) = w.ring->one();
    pr.f_minus1(0, 1) = pr.f_0(0, 1) = w.ring->one();
    auto T = totalize({F, S, E}, {pr, inc});
    CHECK(validate(T).ok);
    // split exact: the totalization is contractible
    auto h = null_homotopy(T, w.ring->one());
    CHECK(h.null_homotopic);

    CHECK_THROWS_AS(totalize({E, S, F}, {inc, pr}), std::invalid_argument);
    Morphism two = inc;
    two.f_0(1, 0) = w.ring->var(0);
    CHECK_THROWS_AS(totalize({S, E}, {two}), std::invalid_argument);
}

TEST_CASE("cokernel presentation")
{
    auto w = xd(3);
    auto P = cokernel_presentation(stab_residue(w, 3));
    CHECK_FALSE(P.is_zero);
    CHECK(P.matrix(0, 0) == w.ring->var(0));
    auto Z = cokernel_presentation(rank_one(w, w.ring->one(), w.w));
    CHECK(Z.is_zero);
}

TEST_CASE("null homotopies")
{
    auto w = xd(3);
    auto E = stab_residue(w, 3);
    auto z = null_homotopy(E, w.ring->zero());
    CHECK(z.null_homotopic);
    CHECK(z.verified);
    CHECK(z.h_0.is_zero());
    CHECK_FALSE(null_homotopy(E, w.ring->one()).null_homotopic);
    auto hx = null_homotopy(E, w.ring->var(0));
    CHECK(hx.null_homotopic);
    CHECK(hx.verified);

    auto w2 = xd(2);
    auto F = rank_one(w2, w2.ring->var(0), w2.ring->var(0));
    auto u = null_homotopy_ungraded(F, w2.ring->var(0), 2);
    REQUIRE(u.null_homotopic);
    CHECK(u.verified);
    CHECK(u.h_0(0, 0) == Polynomial::constant(1, Rational(1, 2)));
    CHECK(u.h_minus1(0, 0) == Polynomial::constant(1, Rational(1, 2)));
    CHECK_FALSE(null_homotopy_ungraded(F, w2.ring->one(), 3).null_homotopic);
}

TEST_CASE("annihilator estimate")
{
    auto w = xd(3);
    auto C = rank_one(w, w.ring->one(), w.w);
    auto all = estimate_annihilator(w, {C}, 4);
    CHECK(all.gens.size() == 5); // 1, x, ..., x^4
    auto I = estimate_annihilator(w, {stab_residue(w, 3)}, 4);
    CHECK(I.gens.size() == 4);
    CHECK(ideal_membership(w.ring->var(0).pow(2), I).member);
    CHECK_FALSE(ideal_membership(w.ring->one(), I).member);
    CHECK_THROWS_AS(estimate_annihilator(w, {}, 3), std::invalid_argument);
}

TEST_CASE("koszul factorizations validate")
{
    std::mt19937 rng(1);
    auto w = z_graded_fermat({2, 3, 4});
    for (int t = 0; t < 15; ++t) CHECK(validate(random_fermat_factorization(rng, w, {2, 3, 4}, 6)).ok);
    auto R = z_ring({"x", "y"}, {1, 1});
    auto v = Potential::parse(R, "x^2*y + y^3");
    auto K = koszul_factorization(v, {R->var(1), R->var(1)}, {R->parse("x^2"), R->parse("y^2")},
                                  {zdeg(v, 1), zdeg(v, 1)});
    CHECK(validate(K).ok);
}

TEST_CASE("brute-force Hochschild complex of x^3")
{
    auto w = xd(3);
    auto T = hh_bruteforce(w, zrange(w, 0, 2), -4, 4);
    CHECK(T.at(0, 0) == 1);
    // Jacobian line: Jac(x^3) = <1, x>; the odd column carries the twisted sectors
    CHECK(T.at(1, 0) == 1);
    CHECK(T.at(2, -1) == 2);
    int total = 0;
    for (auto& row : T.dims)
        for (int v : row) total += v;
    CHECK(total == 4);
}

TEST_CASE("brute-force complex: Euler characteristic is conserved")
{
    for (auto w : {xd(4), Potential::parse(z_ring({"x", "y"}, {1, 1}), "x^2 + y^2")}) {
        auto D = diagonal(w);
        for (Int m = -3; m <= 4; ++m) {
            const int lo = -3, hi = 3;
            auto c = hh_complex_slice(D, w, zdeg(w, m), lo, hi);
            long chi_c = 0, chi_h = 0;
            for (int t = lo; t <= hi; ++t) {
                const int k = t - lo + 1;
                const int sign = t % 2 ? -1 : 1;
                chi_c += sign * c.dims[k];
                chi_h += sign * (c.dims[k] - c.ranks[k] - c.ranks[k - 1]);
            }
            const int slo = lo % 2 ? -1 : 1, shi = hi % 2 ? -1 : 1;
            CHECK(chi_c == chi_h + shi * c.ranks[hi - lo + 1] + slo * c.ranks[0]);
        }
    }
}

TEST_CASE("integral transform: zero kernel")
{
    auto w = xd(3);
    auto v = Potential::parse(z_ring({"y"}, {1}), "y^2");
    auto T = tensor_ring(w, v, -1);
    auto K = Factorization::make(T, {}, {}, PolyMatrix(0, 0, 2), PolyMatrix(0, 0, 2));
    auto P = integral_transform(K, stab_residue(w, 3), v, 10);
    CHECK(P.E_0.rank() == 0);
    CHECK(P.E_minus1.rank() == 0);
    CHECK(validate(P).ok);
}

TEST_CASE("integral transform along the diagonal reproduces Hom fingerprints")
{
    for (int d : {2, 3, 4}) {
        auto w = xd(d);
        auto D = diagonal(w);
        for (auto& E : {stab_residue(w, d), rank_one(w, w.ring->var(0).pow(d - 1), w.ring->var(0))}) {
            auto ms = zrange(w, -d, d);
            auto P = integral_transform(D.F, E, w, transform_cap(E, ms, -2, 2));
            CHECK(hom_table(E, P, ms, -2, 2) == hom_table(E, E, ms, -2, 2));
        }
    }
}

TEST_CASE("integral transform: adjunction with the box kernel")
{
    auto w = xd(3);
    auto v = Potential::parse(z_ring({"y"}, {1}), "y^4");
    auto E = stab_residue(w, 3);
    auto F = rank_one(v, v.ring->var(0).pow(2), v.ring->var(0).pow(2));
    auto Fp = rank_one(v, v.ring->var(0), v.ring->var(0).pow(3));
    auto K = box(dual(E), F);
    const BoxMinus& bm = K.w.ring->tensor->grading;
    auto ms = zrange(v, -4, 4);
    auto P = integral_transform(K, E, v, transform_cap(Fp, ms, -2, 2));
    auto lhs = hom_table(Fp, P, ms, -2, 2);
    auto src = box(dual(E), Fp, K.w);
    std::vector<GroupElement> pms;
    for (auto& m : ms) pms.push_back(bm.pi(w.group().zero(), m));
    auto rhs = hom_table(src, K, pms, -2, 2);
    CHECK(lhs.dims == rhs.dims);
    int nonzero = 0;
    for (auto& row : lhs.dims)
        for (int x : row) nonzero += x != 0;
    CHECK(nonzero > 0);
}

TEST_CASE("integral transform: truncated generators are guarded")
{
    auto w = xd(3);
    auto D = diagonal(w);
    auto E = stab_residue(w, 3);
    auto P = integral_transform(D.F, E, w, 1);
    CHECK(P.is_truncated());
    CHECK_THROWS_AS(hom_cohomology(E, P, zdeg(w, 4), 0, 0), std::logic_error);
}
