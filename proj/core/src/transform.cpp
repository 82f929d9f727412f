#include "grmf/factorization.hpp"

#include <algorithm>
#include <map>

namespace grmf {

namespace {

// k with a = k d, if any; d must be non-torsion.
std::optional<Int> multiple_of(const AbelianGroup& M, const GroupElement& a, const GroupElement& d)
{
    for (int i = 0; i < M.free_rank(); ++i) {
        if (d.c[i] == 0) continue;
        if (a.c[i] % d.c[i] != 0) return std::nullopt;
        Int k = a.c[i] / d.c[i];
        if (M.scale(k, d) == a) return k;
        return std::nullopt;
    }
    throw std::invalid_argument("integral transform: degree of w is torsion");
}

struct Gen {
    int k, nu;
    Monomial alpha;
};

struct Block {
    int kc, ec;  // components of K and E: 0 or -1
    bool extra; // label shifted by e
    std::vector<Gen> gens;
    std::vector<GroupElement> labels;
    std::vector<Int> wit;
    std::map<std::tuple<int, int, Monomial>, int> index;
};

} // namespace

Factorization integral_transform(const Factorization& K, const Factorization& E, const Potential& v, Int cap)
{
    const auto& info = K.w.ring->tensor;
    if (!info || info->A != E.w.ring || info->B != v.ring)
        throw std::invalid_argument("integral_transform: kernel lives over the wrong rings");
    const GradedRing& RA = *E.w.ring;
    const GradedRing& RB = *v.ring;
    const AbelianGroup& M = *RA.group();
    const AbelianGroup& N = *RB.group();
    const BoxMinus& bm = info->grading;
    const int nA = RA.nvars(), nB = RB.nvars();
    {
        std::vector<int> ma(nA), mb(nB);
        for (int i = 0; i < nA; ++i) ma[i] = i;
        for (int i = 0; i < nB; ++i) mb[i] = nA + i;
        if (K.w.w != v.w.remap(nA + nB, mb) - E.w.w.remap(nA + nB, ma))
            throw std::invalid_argument("integral_transform: kernel potential is not -w ⊞ v");
    }
    const GroupElement& e = v.d;
    const Int wa_d = RA.witness_of(E.w.d), wb_e = RB.witness_of(e);
    // unscaled witness on M ⊟ N; vanishes on (d, -e)
    auto Wu = [&](const GroupElement& x) {
        auto [a, b] = bm.lift(x);
        return wb_e * RA.witness_of(a) + wa_d * RB.witness_of(b);
    };
    const Int margin = 2 * std::max<Int>(wb_e, 1) + 1;
    const Int row_cap = cap + margin;

    Block blocks[4] = {{0, -1, false, {}, {}, {}, {}}, {-1, 0, false, {}, {}, {}, {}},
                       {0, 0, false, {}, {}, {}, {}},  {-1, -1, true, {}, {}, {}, {}}};
    // blocks 0,1 make up Phi_{-1}; blocks 2,3 make up Phi_0
    auto Kdeg = [&](int c) -> const std::vector<GroupElement>& { return c == 0 ? K.E_0.degrees : K.E_minus1.degrees; };
    auto Edeg = [&](int c) -> const std::vector<GroupElement>& { return c == 0 ? E.E_0.degrees : E.E_minus1.degrees; };
    for (auto& B : blocks) {
        const auto& kd = Kdeg(B.kc);
        const auto& ed = Edeg(B.ec);
        for (int k = 0; k < (int)kd.size(); ++k)
            for (int nu = 0; nu < (int)ed.size(); ++nu) {
                // wa_d * wB(n0) = wb_e * (wA(alpha) - wA(nu)) - Wu(mu_k)
                const Int bound_n0 = row_cap + (B.extra ? wb_e : 0);
                const Int num = wa_d * bound_n0 + Wu(kd[k]);
                const Int amax = floor_div(num, std::max<Int>(wb_e, 1)) + RA.witness_of(ed[nu]) + 1;
                if (amax < 0) continue;
                for (auto& [deg, monos] : monomials_by_degree(RA, 0, amax)) {
                    GroupElement x = bm.group->sub(bm.pi(M.sub(deg, ed[nu]), N.zero()), kd[k]);
                    auto [a, b] = bm.lift(x);
                    auto q = multiple_of(M, a, E.w.d);
                    if (!q) continue;
                    GroupElement n0 = N.add(b, N.scale(*q, e));
                    GroupElement label = N.neg(n0);
                    if (B.extra) label = N.add(label, e);
                    const Int w = RB.witness_of(N.neg(label));
                    if (w > row_cap) continue;
                    for (auto& al : monos) {
                        B.index[{k, nu, al}] = (int)B.gens.size();
                        B.gens.push_back({k, nu, al});
                        B.labels.push_back(label);
                        B.wit.push_back(w);
                    }
                }
            }
    }
    const int off[4] = {0, (int)blocks[0].gens.size(), 0, (int)blocks[2].gens.size()};
    const int n1 = off[1] + (int)blocks[1].gens.size(), n0 = off[3] + (int)blocks[3].gens.size();
    PolyMatrix p0(n0, n1, nB), p1(n1, n0, nB);

    auto split = [&](const Monomial& t) {
        Monomial x(t.begin(), t.begin() + nA), y(t.begin() + nA, t.end());
        return std::make_pair(x, y);
    };
    auto add_mono = [](Monomial a, const Monomial& b) {
        for (size_t i = 0; i < a.size(); ++i) a[i] += b[i];
        return a;
    };
    auto target = [&](int b, int k, int nu, const Monomial& al) {
        auto it = blocks[b].index.find({k, nu, al});
        if (it == blocks[b].index.end()) throw std::logic_error("integral transform: row margin too small");
        return off[b] + it->second;
    };
    // Id ⊗ phi_E from block s to block t
    auto id_tensor = [&](PolyMatrix& P, int col, int tb, const Gen& g, const PolyMatrix& phiE) {
        for (int nu2 = 0; nu2 < phiE.rows; ++nu2)
            for (auto& [gm, c] : phiE(nu2, g.nu).terms())
                P(target(tb, g.k, nu2, add_mono(g.alpha, gm)), col).add_term(Monomial(nB, 0), c);
    };
    // sign * phi_K ⊗ Id
    auto k_tensor = [&](PolyMatrix& P, int col, int tb, const Gen& g, const PolyMatrix& phiK, int sign) {
        for (int k2 = 0; k2 < phiK.rows; ++k2)
            for (auto& [t, c] : phiK(k2, g.k).terms()) {
                auto [x, y] = split(t);
                P(target(tb, k2, g.nu, add_mono(g.alpha, x)), col).add_term(y, sign > 0 ? c : Rational(-c));
            }
    };
    for (int b = 0; b < 4; ++b) {
        const Block& B = blocks[b];
        for (size_t i = 0; i < B.gens.size(); ++i) {
            if (B.wit[i] > cap) continue; // column left uncomputed
            const Gen& g = B.gens[i];
            const int col = off[b] + (int)i;
            switch (b) {
            case 0: // K_0 E_{-1} -> Phi_0
                id_tensor(p0, col, 2, g, E.phi_0);
                k_tensor(p0, col, 3, g, K.phi_minus1, +1);
                break;
            case 1: // K_{-1} E_0 -> Phi_0
                k_tensor(p0, col, 2, g, K.phi_0, -1);
                id_tensor(p0, col, 3, g, E.phi_minus1);
                break;
            case 2: // K_0 E_0 -> Phi_{-1}
                id_tensor(p1, col, 0, g, E.phi_minus1);
                k_tensor(p1, col, 1, g, K.phi_minus1, -1);
                break;
            case 3: // K_{-1} E_{-1} -> Phi_{-1}
                k_tensor(p1, col, 0, g, K.phi_0, +1);
                id_tensor(p1, col, 1, g, E.phi_0);
                break;
            }
        }
    }
    std::vector<GroupElement> L1 = blocks[0].labels, L0 = blocks[2].labels;
    L1.insert(L1.end(), blocks[1].labels.begin(), blocks[1].labels.end());
    L0.insert(L0.end(), blocks[3].labels.begin(), blocks[3].labels.end());
    Factorization F = Factorization::make(v, L1, L0, p0, p1);
    bool truncated = false;
    for (auto& B : blocks)
        for (Int w : B.wit) truncated |= w > cap;
    if (truncated) {
        for (int b = 0; b < 4; ++b) {
            auto& flags = b < 2 ? F.partial_minus1 : F.partial_0;
            for (Int w : blocks[b].wit) flags.push_back(w > cap);
        }
    }
    return F;
}

Int transform_cap(const Factorization& G, const std::vector<GroupElement>& ms, int t_lo, int t_hi)
{
    const GradedRing& R = *G.w.ring;
    const AbelianGroup& N = *R.group();
    Int best = 0;
    const Int l_lo = floor_div(t_lo - 1, 2), l_hi = floor_div(t_hi + 1, 2) + 1;
    for (auto& m : ms)
        for (Int l = l_lo; l <= l_hi; ++l) {
            GroupElement lam = N.add(m, N.scale(l, G.w.d));
            for (auto* comp : {&G.E_minus1.degrees, &G.E_0.degrees})
                for (auto& s : *comp) best = std::max(best, R.witness_of(N.sub(lam, s)));
        }
    return best;
}

} // namespace grmf
