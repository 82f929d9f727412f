#include "grmf/ring.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace grmf {

static IntVec functional_from_free_coeffs(const AbelianGroup& G, const IntVec& a)
{
    IntVec c(G.ambient_rank(), 0);
    for (int k = 0; k < G.ambient_rank(); ++k) {
        IntVec ek(G.ambient_rank(), 0);
        ek[k] = 1;
        GroupElement e = G.from_ambient(ek);
        Int s = 0;
        for (int j = 0; j < G.free_rank(); ++j) s = checked_add(s, checked_mul(a[j], e.c[j]));
        c[k] = s;
    }
    return c;
}

static Int apply_functional(const IntVec& c, const IntVec& x)
{
    Int s = 0;
    for (size_t i = 0; i < c.size(); ++i) s = checked_add(s, checked_mul(c[i], x[i]));
    return s;
}

RingPtr GradedRing::make(GroupPtr group, std::vector<Variable> vars, std::optional<IntVec> ambient_witness)
{
    auto R = std::make_shared<GradedRing>();
    R->group_ = group;
    R->vars_ = std::move(vars);
    std::set<std::string> seen;
    for (auto& v : R->vars_) {
        if ((int)v.degree.c.size() != group->ngens()) throw std::invalid_argument("variable degree has wrong shape");
        if (!seen.insert(v.name).second) throw std::invalid_argument("duplicate variable name " + v.name);
    }
    auto positive = [&](const IntVec& c) {
        for (auto& v : R->vars_)
            if (apply_functional(c, group->to_ambient(v.degree)) <= 0) return false;
        return true;
    };
    if (ambient_witness) {
        IntVec c = *ambient_witness;
        if ((int)c.size() != group->ambient_rank()) throw std::invalid_argument("witness has wrong length");
        for (auto& rel : group->relations())
            if (apply_functional(c, rel) != 0) throw std::invalid_argument("witness does not vanish on relations");
        if (!positive(c)) throw std::invalid_argument("witness is not positive on every variable");
        R->witness_ = c;
    } else {
        const int r = group->free_rank();
        bool found = false;
        if (r == 0) {
            if (!R->vars_.empty())
                throw std::invalid_argument("no positivity witness: grading group has no free part");
            R->witness_ = IntVec(group->ambient_rank(), 0);
            found = true;
        }
        for (int bound = 1; bound <= 3 && !found; ++bound) {
            IntVec a(r, -bound);
            for (;;) {
                IntVec c = functional_from_free_coeffs(*group, a);
                if (positive(c)) {
                    R->witness_ = c;
                    found = true;
                    break;
                }
                int i = r - 1;
                while (i >= 0 && a[i] == bound) a[i--] = -bound;
                if (i < 0) break;
                ++a[i];
            }
        }
        if (!found) throw std::invalid_argument("no positivity witness found; supply one explicitly");
    }
    for (auto& v : R->vars_) R->var_witness_.push_back(R->witness_of(v.degree));
    return R;
}

std::vector<std::string> GradedRing::names() const
{
    std::vector<std::string> n;
    for (auto& v : vars_) n.push_back(v.name);
    return n;
}

Int GradedRing::witness_of(const GroupElement& e) const
{
    return apply_functional(witness_, group_->to_ambient(e));
}

GroupElement GradedRing::monomial_degree(const Monomial& m) const
{
    IntVec c(group_->ngens(), 0);
    for (int i = 0; i < nvars(); ++i)
        if (m[i])
            for (int j = 0; j < group_->ngens(); ++j) c[j] = checked_add(c[j], checked_mul(m[i], vars_[i].degree.c[j]));
    return group_->reduce(c);
}

std::optional<GroupElement> GradedRing::degree_of(const Polynomial& p) const
{
    if (p.is_zero()) throw std::invalid_argument("degree of the zero polynomial is undefined");
    std::optional<GroupElement> d;
    for (auto& [m, c] : p.terms()) {
        GroupElement e = monomial_degree(m);
        if (!d) d = e;
        else if (*d != e) return std::nullopt;
    }
    return d;
}

bool GradedRing::is_homogeneous_of(const Polynomial& p, const GroupElement& d) const
{
    for (auto& [m, c] : p.terms())
        if (monomial_degree(m) != d) return false;
    return true;
}

SlicePtr GradedRing::slice(const GroupElement& m) const
{
    {
        std::lock_guard<std::mutex> lk(cache_mu_);
        auto it = cache_.find(m);
        if (it != cache_.end()) return it->second;
    }
    auto S = std::make_shared<SliceBasis>();
    const Int target = witness_of(m);
    const int n = nvars();
    if (target >= 0) {
        Monomial cur(n, 0);
        IntVec deg(group_->ngens(), 0);
        std::function<void(int, Int)> rec = [&](int i, Int left) {
            if (i == n) {
                if (left == 0 && group_->reduce(deg) == m) S->monos.push_back(cur);
                return;
            }
            if (i == n - 1) {
                if (left % var_witness_[i]) return;
                int e = (int)(left / var_witness_[i]);
                cur[i] = e;
                for (int j = 0; j < (int)deg.size(); ++j) deg[j] += e * vars_[i].degree.c[j];
                rec(n, 0);
                for (int j = 0; j < (int)deg.size(); ++j) deg[j] -= e * vars_[i].degree.c[j];
                cur[i] = 0;
                return;
            }
            for (int e = (int)(left / var_witness_[i]); e >= 0; --e) {
                cur[i] = e;
                for (int j = 0; j < (int)deg.size(); ++j) deg[j] += e * vars_[i].degree.c[j];
                rec(i + 1, left - e * var_witness_[i]);
                for (int j = 0; j < (int)deg.size(); ++j) deg[j] -= e * vars_[i].degree.c[j];
            }
            cur[i] = 0;
        };
        if (n == 0) {
            if (group_->is_zero(m)) S->monos.push_back(Monomial{});
        } else {
            rec(0, target);
        }
    }
    for (int i = 0; i < (int)S->monos.size(); ++i) S->index.emplace(S->monos[i], i);
    std::lock_guard<std::mutex> lk(cache_mu_);
    auto [it, ok] = cache_.emplace(m, S);
    return it->second;
}

Potential Potential::make(RingPtr ring, const Polynomial& w)
{
    if (w.is_zero()) throw std::invalid_argument("potential is zero; its degree must be given explicitly");
    auto d = ring->degree_of(w);
    if (!d) throw std::invalid_argument("potential is not homogeneous");
    if (ring->group()->is_torsion(*d)) throw std::invalid_argument("degree of the potential is torsion");
    return Potential{ring, w, *d};
}

Potential Potential::make(RingPtr ring, const Polynomial& w, const GroupElement& d)
{
    if (!ring->is_homogeneous_of(w, d)) throw std::invalid_argument("potential is not homogeneous of the given degree");
    if (ring->group()->is_torsion(d)) throw std::invalid_argument("degree of the potential is torsion");
    return Potential{ring, w, d};
}

Potential Potential::parse(RingPtr ring, const std::string& text)
{
    return make(ring, ring->parse(text));
}

std::vector<Polynomial> jacobian_sequence(const Potential& w)
{
    std::vector<Polynomial> out;
    for (int i = 0; i < w.ring->nvars(); ++i) out.push_back(w.w.derivative(i));
    return out;
}

Potential tensor_ring(const Potential& A, const Potential& B, int sign)
{
    const GradedRing& RA = *A.ring;
    const GradedRing& RB = *B.ring;
    BoxMinus bm = boxminus(RA.group(), RB.group(), A.d, B.d);
    std::vector<Variable> vars;
    std::set<std::string> used;
    for (auto& v : RA.variables()) {
        vars.push_back({v.name, bm.left.apply(v.degree)});
        used.insert(v.name);
    }
    for (auto& v : RB.variables()) {
        std::string nm = v.name;
        while (used.count(nm)) nm += "_2";
        used.insert(nm);
        vars.push_back({nm, bm.right.apply(v.degree)});
    }
    // witness: wB(e) * wA on the M part, wA(d) * wB on the N part
    Int wa_d = RA.witness_of(A.d), wb_e = RB.witness_of(B.d);
    IntVec c;
    for (Int x : RA.witness()) c.push_back(checked_mul(wb_e, x));
    for (Int x : RB.witness()) c.push_back(checked_mul(wa_d, x));
    Int g = 0;
    for (Int x : c) g = gcd_int(g, x);
    if (g > 1)
        for (Int& x : c) x /= g;
    auto ring = std::const_pointer_cast<GradedRing>(GradedRing::make(bm.group, vars, c));
    auto info = std::make_shared<TensorInfo>();
    info->grading = bm;
    info->A = A.ring;
    info->B = B.ring;
    info->nA = RA.nvars();
    ring->tensor = info;
    const int n = RA.nvars() + RB.nvars();
    std::vector<int> ma(RA.nvars()), mb(RB.nvars());
    for (int i = 0; i < RA.nvars(); ++i) ma[i] = i;
    for (int i = 0; i < RB.nvars(); ++i) mb[i] = RA.nvars() + i;
    Polynomial w = A.w.remap(n, ma).scaled(sign) + B.w.remap(n, mb);
    GroupElement d = bm.left.apply(A.d);
    return Potential::make(ring, w, d);
}

static std::string fresh_name(const GradedRing& R, std::string base)
{
    auto names = R.names();
    while (std::find(names.begin(), names.end(), base) != names.end()) base += "_";
    return base;
}

static KnorrerResult knorrer_impl(const Potential& P, int count)
{
    const GradedRing& R = *P.ring;
    const AbelianGroup& M = *R.group();
    const int n = M.ambient_rank();
    IntMat rel;
    for (auto& r : M.relations()) {
        IntVec v = r;
        v.resize(n + count, 0);
        rel.push_back(v);
    }
    IntVec da = M.to_ambient(P.d);
    for (int k = 0; k < count; ++k) {
        IntVec v = da;
        v.resize(n + count, 0);
        v[n + k] = -2;
        rel.push_back(v);
    }
    GroupPtr G = AbelianGroup::quotient(n + count, rel);
    IntMat emb(n + count, IntVec(n, 0));
    for (int i = 0; i < n; ++i) emb[i][i] = 1;
    GroupHom e(R.group(), G, emb);
    std::vector<Variable> vars;
    for (auto& v : R.variables()) vars.push_back({v.name, e.apply(v.degree)});
    const char* base[2] = {"u", "v"};
    std::vector<std::string> added;
    for (int k = 0; k < count; ++k) {
        IntVec ek(n + count, 0);
        ek[n + k] = 1;
        std::string nm = fresh_name(R, base[k]);
        added.push_back(nm);
        vars.push_back({nm, G->from_ambient(ek)});
    }
    IntVec c;
    for (Int x : R.witness()) c.push_back(2 * x);
    Int wd = R.witness_of(P.d);
    for (int k = 0; k < count; ++k) c.push_back(wd);
    RingPtr ring = GradedRing::make(G, vars, c);
    const int nv = ring->nvars();
    std::vector<int> map(R.nvars());
    for (int i = 0; i < R.nvars(); ++i) map[i] = i;
    Polynomial w = P.w.remap(nv, map);
    for (int k = 0; k < count; ++k) {
        Monomial m(nv, 0);
        m[R.nvars() + k] = 2;
        w.add_term(m, 1);
    }
    return {Potential::make(ring, w, e.apply(P.d)), e};
}

KnorrerResult knorrer_augment(const Potential& w)
{
    return knorrer_impl(w, 2);
}

KnorrerResult knorrer_augment_single(const Potential& w)
{
    return knorrer_impl(w, 1);
}

FixedRestriction restrict_to_fixed(const Potential& P, const Character& g, const GroupHom& proj)
{
    const GradedRing& R = *P.ring;
    FixedRestriction out;
    std::vector<Variable> vars;
    std::vector<int> map(R.nvars(), -1);
    std::vector<bool> kill(R.nvars(), false);
    for (int i = 0; i < R.nvars(); ++i) {
        const auto& v = R.variables()[i];
        if (pair(g, proj.apply(v.degree)).is_zero()) {
            map[i] = (int)out.fixed.size();
            out.fixed.push_back(i);
            vars.push_back(v);
        } else {
            kill[i] = true;
            out.complement.push_back(i);
            out.complement_degrees.push_back(v.degree);
        }
    }
    out.subring = GradedRing::make(R.group(), vars, R.witness());
    out.w_g = P.w.kill_variables(kill).remap(out.subring->nvars(), map);
    return out;
}

Potential maximally_graded_fermat(const std::vector<Int>& weights)
{
    const int n = (int)weights.size();
    if (n == 0) throw std::invalid_argument("empty weight sequence");
    IntMat rel;
    for (int i = 0; i + 1 < n; ++i) {
        IntVec r(n, 0);
        r[i] = weights[i];
        r[i + 1] = -weights[i + 1];
        rel.push_back(r);
    }
    GroupPtr M = AbelianGroup::quotient(n, rel);
    Int L = 1;
    for (Int d : weights) {
        if (d < 1) throw std::invalid_argument("weights must be positive");
        L = lcm_int(L, d);
    }
    IntVec c(n);
    for (int i = 0; i < n; ++i) c[i] = L / weights[i];
    std::vector<Variable> vars;
    for (int i = 0; i < n; ++i) {
        IntVec e(n, 0);
        e[i] = 1;
        vars.push_back({"x" + std::to_string(i), M->from_ambient(e)});
    }
    RingPtr R = GradedRing::make(M, vars, c);
    Polynomial w(n);
    for (int i = 0; i < n; ++i) {
        Monomial m(n, 0);
        m[i] = (int)weights[i];
        w.add_term(m, 1);
    }
    return Potential::make(R, w);
}

Potential z_graded_fermat(const std::vector<Int>& exps)
{
    const int n = (int)exps.size();
    Int L = 1;
    for (Int d : exps) L = lcm_int(L, d);
    GroupPtr Z = AbelianGroup::free(1);
    std::vector<Variable> vars;
    for (int i = 0; i < n; ++i) vars.push_back({"x" + std::to_string(i), Z->reduce({L / exps[i]})});
    RingPtr R = GradedRing::make(Z, vars, IntVec{1});
    Polynomial w(n);
    for (int i = 0; i < n; ++i) {
        Monomial m(n, 0);
        m[i] = (int)exps[i];
        w.add_term(m, 1);
    }
    return Potential::make(R, w);
}

} // namespace grmf
