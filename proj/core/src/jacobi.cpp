#include "grmf/jacobi.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace grmf {

GradedIdealSpec GradedIdealSpec::make(RingPtr ring, const std::vector<Polynomial>& gens)
{
    GradedIdealSpec I{ring, {}, {}};
    for (auto& g : gens) {
        if (g.is_zero()) continue;
        auto d = ring->degree_of(g);
        if (!d) throw std::invalid_argument("ideal generator is not homogeneous");
        I.gens.push_back(g);
        I.degrees.push_back(*d);
    }
    return I;
}

GradedIdealSpec GradedIdealSpec::operator+(const GradedIdealSpec& o) const
{
    if (ring != o.ring) throw std::invalid_argument("ideals live in different rings");
    GradedIdealSpec S = *this;
    S.gens.insert(S.gens.end(), o.gens.begin(), o.gens.end());
    S.degrees.insert(S.degrees.end(), o.degrees.begin(), o.degrees.end());
    return S;
}

GradedIdealSpec jacobian_ideal(const Potential& w)
{
    return GradedIdealSpec::make(w.ring, jacobian_sequence(w));
}

GradedIdealSpec monomial_ideal(RingPtr ring, const GroupElement& m)
{
    std::vector<Polynomial> gens;
    for (auto& mono : ring->monomial_basis(m)) gens.push_back(Polynomial::monomial(mono));
    return GradedIdealSpec::make(ring, gens);
}

RVec coefficient_vector(const SliceBasis& S, const Polynomial& p)
{
    RVec v(S.size());
    for (auto& [m, c] : p.terms()) {
        int k = S.find(m);
        if (k < 0) throw std::invalid_argument("polynomial has a term outside the slice");
        v[k] = c;
    }
    return v;
}

RationalMatrix multiplication_matrix(const GradedRing& R, const std::vector<Polynomial>& gens,
                                     const std::vector<GroupElement>& degrees, const GroupElement& m)
{
    const AbelianGroup& G = *R.group();
    auto target = R.slice(m);
    std::vector<SlicePtr> src;
    int ncols = 0;
    for (size_t i = 0; i < gens.size(); ++i) {
        src.push_back(R.slice(G.sub(m, degrees[i])));
        ncols += src.back()->size();
    }
    RationalMatrix A(target->size(), ncols);
    int col = 0;
    for (size_t i = 0; i < gens.size(); ++i)
        for (auto& mono : src[i]->monos) {
            for (auto& [t, c] : gens[i].terms()) {
                Monomial k = t;
                for (size_t v = 0; v < k.size(); ++v) k[v] += mono[v];
                A.add(target->find(k), col, c);
            }
            ++col;
        }
    return A;
}

int quotient_slice_dim(const GradedIdealSpec& I, const GroupElement& m)
{
    auto S = I.ring->slice(m);
    if (S->size() == 0) return 0;
    return S->size() - rank(multiplication_matrix(*I.ring, I.gens, I.degrees, m));
}

int jacobian_slice_dim(const Potential& w, const GroupElement& m)
{
    return quotient_slice_dim(jacobian_ideal(w), m);
}

std::vector<GroupElement> jacobian_degrees(const Potential& w)
{
    std::vector<GroupElement> out;
    for (auto& v : w.ring->variables()) out.push_back(w.group().sub(w.d, v.degree));
    return out;
}

KoszulSlice koszul_slice(const GradedRing& R, const std::vector<Polynomial>& seq,
                         const std::vector<GroupElement>& degrees, const GroupElement& m)
{
    const AbelianGroup& G = *R.group();
    const int c = (int)seq.size();
    if ((int)degrees.size() != c) throw std::invalid_argument("one degree per sequence element is required");
    for (int i = 0; i < c; ++i)
        if (!R.is_homogeneous_of(seq[i], degrees[i])) throw std::invalid_argument("Koszul sequence element is not homogeneous of its degree");

    // subsets of each size in lexicographic order of their index lists
    std::vector<std::vector<std::vector<int>>> subsets(c + 1);
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int start) {
        subsets[cur.size()].push_back(cur);
        for (int i = start; i < c; ++i) {
            cur.push_back(i);
            rec(i + 1);
            cur.pop_back();
        }
    };
    rec(0);
    for (auto& s : subsets) std::sort(s.begin(), s.end());

    struct Term {
        std::map<std::vector<int>, std::pair<int, SlicePtr>> blocks; // subset -> (offset, slice)
        int dim = 0;
    };
    std::vector<Term> terms(c + 1);
    for (int p = 0; p <= c; ++p)
        for (auto& I : subsets[p]) {
            GroupElement deg = m;
            for (int i : I) deg = G.sub(deg, degrees[i]);
            auto S = R.slice(deg);
            terms[p].blocks.emplace(I, std::make_pair(terms[p].dim, S));
            terms[p].dim += S->size();
        }

    KoszulSlice K;
    K.c = c;
    for (int p = c; p >= 0; --p) K.complex.dims.push_back(terms[p].dim);
    for (int p = c; p >= 1; --p) {
        RationalMatrix D(terms[p - 1].dim, terms[p].dim);
        for (auto& [I, blk] : terms[p].blocks) {
            auto& [off, S] = blk;
            for (int k = 0; k < S->size(); ++k) {
                const Monomial& mono = S->monos[k];
                for (int pos = 0; pos < (int)I.size(); ++pos) {
                    std::vector<int> J = I;
                    J.erase(J.begin() + pos);
                    auto& [toff, T] = terms[p - 1].blocks.at(J);
                    int sign = pos % 2 ? -1 : 1;
                    for (auto& [t, cf] : seq[I[pos]].terms()) {
                        Monomial e = t;
                        for (size_t v = 0; v < e.size(); ++v) e[v] += mono[v];
                        D.add(toff + T->find(e), off + k, sign * cf);
                    }
                }
            }
        }
        K.complex.d.push_back(std::move(D));
    }
    return K;
}

std::vector<int> koszul_cohomology_dims(const GradedRing& R, const std::vector<Polynomial>& seq,
                                        const std::vector<GroupElement>& degrees, const GroupElement& m)
{
    return cohomology_dims(koszul_slice(R, seq, degrees, m).complex, false);
}

int koszul_cohomology_dim(const GradedRing& R, const std::vector<Polynomial>& seq,
                          const std::vector<GroupElement>& degrees, const GroupElement& m, int j)
{
    const int c = (int)seq.size();
    if (j > 0 || j < -c) return 0;
    return koszul_cohomology_dims(R, seq, degrees, m)[j + c];
}

Membership ideal_membership(const Polynomial& p, const GradedIdealSpec& I)
{
    Membership res;
    const GradedRing& R = *I.ring;
    if (p.is_zero()) {
        res.member = true;
        for (auto& g : I.gens) res.certificate.push_back(Polynomial(g.nvars()));
        return res;
    }
    auto deg = R.degree_of(p);
    if (!deg) throw std::invalid_argument("membership test needs a homogeneous polynomial");
    auto A = multiplication_matrix(R, I.gens, I.degrees, *deg);
    auto S = R.slice(*deg);
    auto sol = solve(A, coefficient_vector(*S, p));
    if (!sol.consistent) return res;
    res.member = true;
    int col = 0;
    for (size_t i = 0; i < I.gens.size(); ++i) {
        Polynomial q(R.nvars());
        for (auto& mono : R.slice(R.group()->sub(*deg, I.degrees[i]))->monos) q.add_term(mono, sol.x[col++]);
        res.certificate.push_back(q);
    }
    return res;
}

EulerCheck euler_condition(const Potential& w)
{
    EulerCheck e;
    if (w.w.is_zero()) {
        e.holds = true;
        e.degenerate = true;
        return e;
    }
    auto J = jacobian_sequence(w);
    auto degs = jacobian_degrees(w);
    GradedIdealSpec I{w.ring, J, degs};
    auto m = ideal_membership(w.w, I);
    e.holds = m.member;
    e.certificate = m.certificate;
    return e;
}

Int socle_witness_degree(const Potential& w)
{
    Int s = 0, D = w.ring->witness_of(w.d);
    for (int i = 0; i < w.ring->nvars(); ++i) s += D - 2 * w.ring->var_witness(i);
    return s;
}

std::optional<int> nilpotent_order(const Polynomial& p, const Potential& w, const GradedIdealSpec& I,
                                   std::optional<int> bound)
{
    if (p.is_zero()) return 1;
    auto deg = w.ring->degree_of(p);
    if (!deg) throw std::invalid_argument("nilpotent order needs a homogeneous polynomial");
    Int wp = w.ring->witness_of(*deg);
    if (wp <= 0) throw std::invalid_argument("polynomial of degree 0 is a unit multiple and never nilpotent");
    int nmax = bound ? *bound : (int)(std::max<Int>(socle_witness_degree(w), 0) / wp + 1);
    GradedIdealSpec J = jacobian_ideal(w) + I;
    Polynomial q = p;
    for (int n = 1; n <= nmax; ++n) {
        if (n > 1) q = q * p;
        if (ideal_membership(q, J).member) return n;
    }
    return std::nullopt;
}

std::vector<std::pair<GroupElement, std::vector<Monomial>>> monomials_by_degree(const GradedRing& R, Int lo, Int hi)
{
    std::map<GroupElement, std::vector<Monomial>> out;
    const int n = R.nvars();
    Monomial cur(n, 0);
    std::function<void(int, Int)> rec = [&](int i, Int used) {
        if (i == n) {
            if (used >= lo) out[R.monomial_degree(cur)].push_back(cur);
            return;
        }
        for (int e = 0; used + e * R.var_witness(i) <= hi; ++e) {
            cur[i] = e;
            rec(i + 1, used + e * R.var_witness(i));
        }
        cur[i] = 0;
    };
    if (hi >= 0) rec(0, 0);
    return {out.begin(), out.end()};
}

bool is_isolated(const Potential& w)
{
    if (w.ring->nvars() == 0) return true;
    Int s = socle_witness_degree(w), D = 0;
    for (int i = 0; i < w.ring->nvars(); ++i) D = std::max(D, w.ring->var_witness(i));
    auto J = jacobian_ideal(w);
    for (auto& [deg, monos] : monomials_by_degree(*w.ring, std::max<Int>(s + 1, 0), s + D))
        if (quotient_slice_dim(J, deg) != 0) return false;
    return true;
}

} // namespace grmf
