#include "grmf/sectors.hpp"

#include <algorithm>
#include <map>

namespace grmf {

std::vector<SectorData> enumerate_sectors(const Potential& w)
{
    const GradedRing& R = *w.ring;
    GroupPtr M = R.group();
    auto fq = finite_quotient_by(M, w.d);
    if (!fq.is_finite) throw std::domain_error("M/(d) is infinite; the sector decomposition needs a finite quotient");
    std::vector<SectorData> out;
    for (auto& g : characters(fq.group)) {
        auto fr = restrict_to_fixed(w, g, fq.projection);
        SectorData s;
        s.g = g;
        s.fixed = fr.fixed;
        s.n_g = (int)fr.fixed.size();
        s.q_g = s.n_g / 2;
        s.c_g = R.nvars() - s.n_g;
        s.d_g = M->zero();
        for (int i : fr.fixed) s.d_g = M->add(s.d_g, R.variables()[i].degree);
        s.v_g = M->zero();
        for (auto& c : fr.complement_degrees) s.v_g = M->sub(s.v_g, c);
        s.w_g = Potential::make(fr.subring, fr.w_g, w.d);
        if (s.n_g == 0) s.isolated = true;
        else if (fr.w_g.is_zero()) s.isolated = false;
        else s.isolated = is_isolated(s.w_g);
        out.push_back(std::move(s));
    }
    return out;
}

static std::vector<int> koszul_dims(const SectorData& s, const GroupElement& mu)
{
    return koszul_cohomology_dims(*s.w_g.ring, jacobian_sequence(s.w_g), jacobian_degrees(s.w_g), mu);
}

std::vector<int> rhom_cell_by_sector(const std::vector<SectorData>& S, const Potential& w, const GroupElement& m, int t)
{
    const AbelianGroup& M = w.group();
    const Int l = floor_div(t, 2);
    std::vector<int> out;
    for (auto& s : S) {
        int total = 0;
        for (int e = 0; e <= s.n_g; ++e) {
            const int p = s.c_g + e;
            if ((p - t) % 2) continue;
            const Int q = floor_div(p, 2);
            GroupElement mu = M.sub(M.add(m, M.scale(l - q, w.d)), s.v_g);
            if (w.ring->witness_of(mu) < 0) continue;
            total += koszul_dims(s, mu)[s.n_g - e];
        }
        out.push_back(total);
    }
    return out;
}

int rhom_cell(const std::vector<SectorData>& S, const Potential& w, const GroupElement& m, int t)
{
    int total = 0;
    for (int x : rhom_cell_by_sector(S, w, m, t)) total += x;
    return total;
}

DimensionTable rhom_table(const Potential& w, const std::vector<GroupElement>& ms, int t_lo, int t_hi)
{
    auto S = enumerate_sectors(w);
    DimensionTable T(ms, t_lo, t_hi);
    for (size_t i = 0; i < ms.size(); ++i)
        for (int t = t_lo; t <= t_hi; ++t) T.at(i, t) = rhom_cell(S, w, ms[i], t);
    return T;
}

std::optional<std::pair<int, int>> rhom_support(const std::vector<SectorData>& S, const Potential& w, const GroupElement& m)
{
    const GradedRing& R = *w.ring;
    const Int Wd = R.witness_of(w.d), Wm = R.witness_of(m);
    int lo = 1, hi = 0;
    for (auto& s : S) {
        if (!s.isolated) return std::nullopt;
        // only the Jacobian ring survives: e = 0, p = c_g
        Int socle = 0;
        for (int i : s.fixed) socle += Wd - 2 * R.var_witness(i);
        const int p = s.c_g;
        const Int q = p / 2, Wv = R.witness_of(s.v_g);
        const Int l0 = -floor_div(Wm - Wv, Wd) + q; // ceil((Wv - Wm)/Wd) + q
        const Int l1 = floor_div(socle + Wv - Wm, Wd) + q;
        if (l0 > l1) continue;
        const int t0 = (int)(2 * l0 + p % 2), t1 = (int)(2 * l1 + p % 2);
        if (lo > hi) lo = t0, hi = t1;
        else lo = std::min(lo, t0), hi = std::max(hi, t1);
    }
    return std::make_pair(lo, hi);
}

std::vector<GroupElement> degrees_in_window(const GradedRing& R, Int lo, Int hi)
{
    const AbelianGroup& M = *R.group();
    if (M.free_rank() != 1) throw std::domain_error("degree windows need a grading group of rank 1, got " + M.describe());
    const Int w0 = R.witness_of(M.generator(0));
    if (w0 == 0) throw std::logic_error("witness vanishes on the free generator");
    const Int step = w0 < 0 ? -w0 : w0;
    std::vector<GroupElement> out;
    for (Int k = -floor_div(-lo, step); k * step <= hi; ++k) {
        IntVec c(M.ngens(), 0);
        c[0] = w0 < 0 ? -k : k;
        // odometer over the torsion coordinates
        while (true) {
            out.push_back(M.reduce(c));
            int i = M.ngens() - 1;
            while (i >= 1 && c[i] == M.torsion()[i - 1] - 1) c[i--] = 0;
            if (i < 1) break;
            ++c[i];
        }
    }
    return out;
}

std::pair<GroupElement, int> serre_cell(const Potential& w)
{
    const GradedRing& R = *w.ring;
    const AbelianGroup& M = w.group();
    GroupElement m = w.d;
    for (auto& v : R.variables()) m = M.sub(m, v.degree);
    return {m, R.nvars() - 2};
}

int hh_sector_dim(const SectorData& s, const Potential& w, int i)
{
    if (((i - s.n_g) % 2 + 2) % 2) return 0;
    const AbelianGroup& M = w.group();
    const Int l = floor_div(i, 2);
    GroupElement deg = M.sub(M.scale(s.q_g - l, w.d), s.d_g);
    if (w.ring->witness_of(deg) < 0) return 0;
    return jacobian_slice_dim(s.w_g, deg);
}

HHResult hh_table(const Potential& w, int i_lo, int i_hi)
{
    auto S = enumerate_sectors(w);
    HHResult r;
    r.table = DimensionTable({w.group().zero()}, i_lo, i_hi);
    for (size_t k = 0; k < S.size(); ++k) {
        if (!S[k].isolated)
            r.warnings.push_back("sector " + std::to_string(k) +
                                 ": restricted potential has non-isolated critical locus; the HH formula assumes isolated");
        std::vector<int> row;
        for (int i = i_lo; i <= i_hi; ++i) {
            int v = hh_sector_dim(S[k], w, i);
            row.push_back(v);
            r.table.at(0, i) += v;
        }
        r.by_sector.push_back(row);
    }
    return r;
}

std::vector<QZ> twist_action(const std::vector<SectorData>& S, const Potential& w, const GroupElement& m)
{
    auto fq = finite_quotient_by(w.ring->group(), w.d);
    GroupElement x = fq.projection.apply(m);
    std::vector<QZ> out;
    for (auto& s : S) out.push_back(-pair(s.g, x));
    return out;
}

ResIndReport res_ind_analysis(const std::vector<SectorData>& S, const Potential& w, const GroupHom& pi)
{
    GroupPtr M = w.ring->group();
    const AbelianGroup& L = *pi.target;
    if (L.is_torsion(pi.apply(w.d))) throw std::domain_error("pi(d) is torsion in L");
    // kernel finite iff pi is injective on the free part over Q
    IntMat N = pi.normal_matrix();
    RationalMatrix F(L.free_rank(), M->free_rank());
    for (int i = 0; i < L.free_rank(); ++i)
        for (int j = 0; j < M->free_rank(); ++j) F.set(i, j, Rational(N[i][j]));
    if (rank(F) != M->free_rank()) throw std::domain_error("kernel of pi is infinite");

    auto tors = torsion_subgroup(M);
    std::vector<GroupElement> K;
    for (auto& h : tors.H->elements()) {
        GroupElement x = tors.inclusion.apply(h);
        if (L.is_zero(pi.apply(x))) K.push_back(x);
    }
    auto fq = finite_quotient_by(M, w.d);
    ResIndReport r;
    r.kernel_order = (Int)K.size();
    for (auto& s : S) {
        bool kills = true;
        for (auto& k : K) kills = kills && pair(s.g, fq.projection.apply(k)).is_zero();
        r.in_G_prime.push_back(kills);
        r.scalar.push_back(kills ? r.kernel_order : 0);
    }
    return r;
}

} // namespace grmf
