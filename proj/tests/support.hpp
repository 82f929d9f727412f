#pragma once

#include "grmf/factorization.hpp"

#include <random>

namespace grmf::testing {

inline RingPtr z_ring(const std::vector<std::string>& names, const std::vector<Int>& degs)
{
    auto Z = AbelianGroup::free(1);
    std::vector<Variable> v;
    for (size_t i = 0; i < names.size(); ++i) v.push_back({names[i], Z->reduce({degs[i]})});
    return GradedRing::make(Z, v);
}

inline GroupElement zdeg(const Potential& w, Int k) { return w.ring->group()->reduce({k}); }

inline std::vector<GroupElement> zrange(const Potential& w, Int lo, Int hi)
{
    std::vector<GroupElement> out;
    for (Int k = lo; k <= hi; ++k) out.push_back(zdeg(w, k));
    return out;
}

inline Polynomial random_homogeneous(std::mt19937& rng, const GradedRing& R, const GroupElement& m)
{
    std::uniform_int_distribution<int> c(-2, 2);
    Polynomial p(R.nvars());
    for (auto& mono : R.monomial_basis(m)) p.add_term(mono, c(rng));
    return p;
}

// Koszul factorization of sum x_i^{a_i} split at random exponents, then
// scrambled by random elementary basis changes.
inline Factorization random_fermat_factorization(std::mt19937& rng, const Potential& w, const std::vector<int>& exps,
                                                 int conjugations = 3)
{
    const GradedRing& R = *w.ring;
    std::vector<Polynomial> f, g;
    std::vector<GroupElement> df;
    for (int i = 0; i < (int)exps.size(); ++i) {
        std::uniform_int_distribution<int> k(0, exps[i]);
        int a = k(rng);
        Polynomial x = R.var(i);
        f.push_back(x.pow(a));
        g.push_back(x.pow(exps[i] - a));
        df.push_back(R.group()->scale(a, R.variables()[i].degree));
    }
    Factorization F = koszul_factorization(w, f, g, df);
    for (int t = 0; t < conjugations; ++t) {
        std::uniform_int_distribution<int> comp(0, 1);
        int c = comp(rng) ? 0 : -1;
        const auto& deg = c == 0 ? F.E_0.degrees : F.E_minus1.degrees;
        if (deg.size() < 2) continue;
        std::uniform_int_distribution<int> idx(0, (int)deg.size() - 1);
        int i = idx(rng), j = idx(rng);
        if (i == j) continue;
        // g = 1 + p e_ij must be degree 0: p of degree mu_i - mu_j
        Polynomial p = random_homogeneous(rng, R, R.group()->sub(deg[i], deg[j]));
        F = elementary_conjugate(F, c, i, j, p);
    }
    return F;
}

// Is the closed degree-0 morphism f a boundary in Hom^0_0(E, F)?
inline bool is_null_homotopic_morphism(const Factorization& E, const Factorization& F, const Morphism& f)
{
    const auto zero = E.w.group().zero();
    HomSpace S = hom_space(E, F, zero, -1), T = hom_space(E, F, zero, 0);
    return solve(hom_differential(E, F, S, T), hom_coordinates(T, f.f_minus1, f.f_0)).consistent;
}

} // namespace grmf::testing
