#include "grmf/factorization.hpp"

#include <algorithm>
#include <bit>
#include <map>

namespace grmf {

std::vector<Polynomial> telescoping_differences(const Potential& w, const Potential& tensor)
{
    const int n = w.ring->nvars(), nv = tensor.ring->nvars();
    if (nv != 2 * n) throw std::invalid_argument("telescoping_differences: tensor ring has the wrong size");
    std::vector<Polynomial> D(n, Polynomial(nv));
    for (auto& [a, c] : w.w.terms())
        for (int i = 0; i < n; ++i) {
            if (a[i] == 0) continue;
            Monomial base(nv, 0);
            for (int j = 0; j < i; ++j) base[n + j] = a[j];
            for (int j = i + 1; j < n; ++j) base[j] = a[j];
            for (int k = 0; k < a[i]; ++k) {
                Monomial m = base;
                m[i] = a[i] - 1 - k;
                m[n + i] = k;
                D[i].add_term(m, c);
            }
        }
    return D;
}

namespace {

struct Wedge {
    unsigned mask;
    int p;
};

// sorted by (size, index list lexicographically)
std::vector<Wedge> exterior_basis(int n)
{
    std::vector<std::pair<std::vector<int>, unsigned>> all;
    for (unsigned m = 0; m < (1u << n); ++m) {
        std::vector<int> idx;
        for (int i = 0; i < n; ++i)
            if (m >> i & 1) idx.push_back(i);
        all.push_back({idx, m});
    }
    std::sort(all.begin(), all.end(), [](auto& a, auto& b) {
        if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
        return a.first < b.first;
    });
    std::vector<Wedge> out;
    for (auto& [idx, m] : all) out.push_back({m, (int)idx.size()});
    return out;
}

int below(unsigned mask, int i) { return std::popcount(mask & ((1u << i) - 1)); }

} // namespace

Diagonal diagonal(const Potential& w)
{
    const GradedRing& R = *w.ring;
    const int n = R.nvars();
    if (n > 16) throw std::invalid_argument("diagonal: too many variables");
    GroupPtr M = R.group();
    auto fq = finite_quotient_by(M, w.d);
    if (!fq.is_finite) throw std::invalid_argument("diagonal: M/(d) is infinite");

    Diagonal D;
    Potential T = tensor_ring(w, w, -1);
    const BoxMinus& bm = T.ring->tensor->grading;
    const AbelianGroup& G = *T.ring->group();
    const int nv = 2 * n;

    auto qel = fq.group->elements();
    std::map<GroupElement, int> class_index;
    for (size_t k = 0; k < qel.size(); ++k) {
        class_index[qel[k]] = (int)k;
        D.classes.push_back(M->from_ambient(fq.group->to_ambient(qel[k])));
    }
    auto cls = [&](const GroupElement& j) { return class_index.at(fq.projection.apply(j)); };
    const int nc = (int)qel.size();

    D.Delta = telescoping_differences(w, T);

    // basis (wedge, class), split by parity of the wedge degree
    auto wedges = exterior_basis(n);
    std::map<unsigned, int> wedge_pos;
    for (size_t k = 0; k < wedges.size(); ++k) wedge_pos[wedges[k].mask] = (int)k;
    std::vector<int> index(wedges.size() * nc);
    std::vector<GroupElement> tw[2]; // [0] even -> Delta_0, [1] odd -> Delta_{-1}
    GroupElement dx = bm.pi(w.d, M->zero());
    for (size_t k = 0; k < wedges.size(); ++k) {
        GroupElement sum = M->zero();
        for (int i = 0; i < n; ++i)
            if (wedges[k].mask >> i & 1) sum = M->add(sum, R.variables()[i].degree);
        for (int j = 0; j < nc; ++j) {
            const GroupElement& lj = D.classes[j];
            GroupElement g = G.add(bm.pi(sum, M->zero()), bm.pi(M->neg(lj), lj));
            g = G.sub(g, G.scale(wedges[k].p / 2, dx));
            auto& v = tw[wedges[k].p % 2];
            index[k * nc + j] = (int)v.size();
            v.push_back(G.neg(g));
        }
    }
    const int n0 = (int)tw[0].size(), n1 = (int)tw[1].size();
    PolyMatrix p0(n0, n1, nv), p1(n1, n0, nv);

    std::vector<GroupElement> ydeg_cache;
    for (size_t k = 0; k < wedges.size(); ++k) {
        const unsigned I = wedges[k].mask;
        const int par = wedges[k].p % 2;
        PolyMatrix& P = par ? p0 : p1; // columns of this parity
        for (int j = 0; j < nc; ++j) {
            const int col = index[k * nc + j];
            const GroupElement& lj = D.classes[j];
            // contraction
            for (int i = 0; i < n; ++i) {
                if (!(I >> i & 1)) continue;
                const unsigned J = I & ~(1u << i);
                const int s = below(I, i) % 2 ? -1 : 1;
                const int kk = wedge_pos.at(J);
                P(index[kk * nc + j], col) += Polynomial::variable(nv, i).scaled(s);
                const int j2 = cls(M->sub(lj, R.variables()[i].degree));
                P(index[kk * nc + j2], col) += Polynomial::variable(nv, n + i).scaled(-s);
            }
            // wedge with -sum Delta_i e_i
            for (int i = 0; i < n; ++i) {
                if (I >> i & 1) continue;
                const unsigned J = I | (1u << i);
                const int s = below(I, i) % 2 ? 1 : -1;
                const int kk = wedge_pos.at(J);
                for (auto& [t, c] : D.Delta[i].terms()) {
                    Monomial yb(t.begin() + n, t.end());
                    const int j2 = cls(M->sub(lj, R.monomial_degree(yb)));
                    P(index[kk * nc + j2], col).add_term(t, s > 0 ? c : Rational(-c));
                }
            }
        }
    }
    D.F = Factorization::make(T, tw[1], tw[0], p0, p1);
    return D;
}

namespace {

struct SPulled {
    std::vector<GroupElement> s0, s1; // s(mu) for Delta_0, Delta_{-1}
    PolyMatrix phi0, phim1;           // over A
};

SPulled pull_back(const Diagonal& D, const Potential& w)
{
    const int n = w.ring->nvars();
    const BoxMinus& bm = D.F.w.ring->tensor->grading;
    const AbelianGroup& M = *w.ring->group();
    auto s = [&](const GroupElement& x) {
        auto [a, b] = bm.lift(x);
        return M.add(a, b);
    };
    SPulled S;
    for (auto& m : D.F.E_0.degrees) S.s0.push_back(s(m));
    for (auto& m : D.F.E_minus1.degrees) S.s1.push_back(s(m));
    std::vector<int> map(2 * n);
    for (int i = 0; i < n; ++i) map[i] = map[n + i] = i;
    S.phi0 = D.F.phi_0.remap(n, map);
    S.phim1 = D.F.phi_minus1.remap(n, map);
    return S;
}

HHComplexSlice slice_of(const SPulled& S, const Potential& w, const GroupElement& m, int t_lo, int t_hi)
{
    const GradedRing& R = *w.ring;
    const AbelianGroup& M = *R.group();
    struct Space {
        std::vector<SlicePtr> slots;
        std::vector<int> off;
        int dim = 0;
    };
    auto space = [&](int t) {
        Space sp;
        const Int l = floor_div(t, 2);
        const auto& s = t % 2 == 0 ? S.s0 : S.s1;
        GroupElement base = M.add(m, M.scale(l, w.d));
        for (auto& mu : s) {
            sp.off.push_back(sp.dim);
            sp.slots.push_back(R.slice(M.sub(base, mu)));
            sp.dim += sp.slots.back()->size();
        }
        return sp;
    };
    HHComplexSlice out;
    std::vector<Space> sp;
    for (int t = t_lo - 1; t <= t_hi + 1; ++t) {
        sp.push_back(space(t));
        out.dims.push_back(sp.back().dim);
    }
    const int nv = R.nvars();
    Monomial k(nv);
    for (int t = t_lo - 1; t <= t_hi; ++t) {
        const Space& a = sp[t - t_lo + 1];
        const Space& b = sp[t - t_lo + 2];
        RationalMatrix Dm(b.dim, a.dim);
        const bool even = t % 2 == 0;
        for (size_t src = 0; src < a.slots.size(); ++src)
            for (int u = 0; u < a.slots[src]->size(); ++u) {
                const Monomial& mono = a.slots[src]->monos[u];
                const int col = a.off[src] + u;
                for (size_t dst = 0; dst < b.slots.size(); ++dst) {
                    // even: -f(b') phi_0(b', b); odd: h(b) phi_{-1}(b, b')
                    const Polynomial& e = even ? S.phi0((int)src, (int)dst) : S.phim1((int)src, (int)dst);
                    for (auto& [t2, c] : e.terms()) {
                        for (int v = 0; v < nv; ++v) k[v] = t2[v] + mono[v];
                        int idx = b.slots[dst]->find(k);
                        if (idx < 0) throw std::logic_error("hh complex: degree mismatch");
                        Dm.add(b.off[dst] + idx, col, even ? Rational(-c) : c);
                    }
                }
            }
        out.ranks.push_back(rank(Dm));
    }
    return out;
}

} // namespace

HHComplexSlice hh_complex_slice(const Diagonal& D, const Potential& w, const GroupElement& m, int t_lo, int t_hi)
{
    return slice_of(pull_back(D, w), w, m, t_lo, t_hi);
}

DimensionTable hh_bruteforce(const Potential& w, const std::vector<GroupElement>& ms, int t_lo, int t_hi)
{
    Diagonal D = diagonal(w);
    SPulled S = pull_back(D, w);
    DimensionTable T(ms, t_lo, t_hi);
    for (size_t i = 0; i < ms.size(); ++i) {
        auto c = slice_of(S, w, ms[i], t_lo, t_hi);
        for (int t = t_lo; t <= t_hi; ++t) {
            const int k = t - t_lo + 1;
            T.at(i, t) = c.dims[k] - c.ranks[k] - c.ranks[k - 1];
        }
    }
    return T;
}

} // namespace grmf
