#include "grmf/orlov.hpp"

#include <algorithm>
#include <stdexcept>

namespace grmf {

WeightSequence WeightSequence::make(std::vector<Int> d)
{
    if (d.empty()) throw std::invalid_argument("empty weight sequence");
    WeightSequence s;
    for (Int x : d) {
        if (x < 1) throw std::invalid_argument("weights must be >= 1");
        s.m = lcm_int(s.m, x);
    }
    s.d = std::move(d);
    return s;
}

std::string WeightSequence::str() const
{
    std::string out = "(";
    for (size_t i = 0; i < d.size(); ++i) out += (i ? "," : "") + std::to_string(d[i]);
    return out + ")";
}

Int gorenstein_degree(const WeightSequence& s)
{
    Int a = -s.m;
    for (Int x : s.d) a = checked_add(a, s.m / x);
    return a;
}

std::string branch_name(Branch b)
{
    switch (b) {
    case Branch::Fano: return "Fano";
    case Branch::CalabiYau: return "CalabiYau";
    case Branch::GeneralType: return "GeneralType";
    }
    return "?";
}

Int subgroup_order(const AbelianGroup& M, const std::vector<GroupElement>& gens)
{
    for (auto& g : gens)
        if (!M.is_torsion(g)) throw std::domain_error("subgroup is infinite: " + M.format(g) + " has infinite order");
    // L finite: tors(M/L) = tors(M)/L
    IntMat rel = M.relations();
    for (auto& g : gens) rel.push_back(M.to_ambient(g));
    GroupPtr Q = AbelianGroup::quotient(M.ambient_rank(), rel);
    return M.torsion_order() / Q->torsion_order();
}

Int weight_torsion_order(const WeightSequence& s)
{
    const int n = (int)s.d.size();
    IntMat rel;
    for (int i = 0; i + 1 < n; ++i) {
        IntVec r(n, 0);
        r[i] = s.d[i];
        r[i + 1] = -s.d[i + 1];
        rel.push_back(r);
    }
    GroupPtr M = AbelianGroup::quotient(n, rel);
    std::vector<GroupElement> gens;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const Int g = gcd_int(s.d[i], s.d[j]);
            IntVec x(n, 0);
            x[i] = s.d[i] / g;
            x[j] = -s.d[j] / g;
            gens.push_back(M->from_ambient(x));
        }
    return subgroup_order(*M, gens);
}

static std::vector<std::string> object_labels(Int a, Int H)
{
    std::vector<std::string> out;
    const Int n = a < 0 ? -a : a;
    for (Int j = 0; j < n; ++j)
        for (Int h = 0; h < H; ++h) {
            std::string base = a > 0 ? "O" : "k";
            std::string tw = j == 0 ? "" : "(" + std::to_string(a > 0 ? j : -j) + ")";
            if (a > 0 && j == 0 && H == 1) tw = "";
            std::string s = base + tw;
            if (H > 1) s += "⊗χ" + std::to_string(h);
            out.push_back(s);
        }
    return out;
}

OrlovReport orlov_classify(const Potential& w)
{
    const GradedRing& R = *w.ring;
    const AbelianGroup& M = w.group();
    if (M.free_rank() != 1) throw std::domain_error("no degree map: the grading group must have rank 1, got " + M.describe());
    if (w.d.c[0] == 0) throw std::domain_error("the potential has torsion degree");
    const Int sign = w.d.c[0] > 0 ? 1 : -1;
    GroupElement param = M.neg(w.d);
    for (auto& v : R.variables()) param = M.add(param, v.degree);

    OrlovReport r;
    r.a_degree = sign * param.c[0];
    r.d_degree = sign * w.d.c[0];
    r.H_order = M.torsion_order();
    r.branch = r.a_degree > 0 ? Branch::Fano : r.a_degree == 0 ? Branch::CalabiYau : Branch::GeneralType;
    r.exceptional_count = (r.a_degree < 0 ? -r.a_degree : r.a_degree) * r.H_order;
    r.side = r.a_degree > 0 ? "sheaf" : r.a_degree < 0 ? "module" : "equivalence";
    r.objects = object_labels(r.a_degree, r.H_order);
    r.citation = r.a_degree > 0   ? "a > 0: D^b(coh Z) = <exceptional objects, MF>"
                 : r.a_degree < 0 ? "a < 0: MF = <exceptional objects, D^b(coh Z)>"
                                  : "a = 0: D^b(coh Z) and MF are equivalent";
    return r;
}

OrlovReport orlov_classify(const WeightSequence& s)
{
    OrlovReport r = orlov_classify(maximally_graded_fermat(s.d));
    r.H_order_combinatorial = weight_torsion_order(s);
    if (s.d.size() == 3 && r.a_degree > 0) r.dynkin = dynkin_classify(s.d[0], s.d[1], s.d[2]).str();
    return r;
}

DynkinLabel dynkin_classify(Int p, Int q, Int r)
{
    Int v[3] = {p, q, r};
    std::sort(v, v + 3);
    if (v[0] < 1) throw std::invalid_argument("weights must be >= 1");
    if (v[0] == 1) return {'A', (int)(v[1] + v[2])};
    if (v[0] == 2 && v[1] == 2) return {'A', (int)(v[2] - 1)};
    if (v[0] == 2 && v[1] == 3) {
        if (v[2] == 3) return {'D', 4};
        if (v[2] == 4) return {'E', 6};
        if (v[2] == 5) return {'E', 8};
    }
    throw std::domain_error("(" + std::to_string(v[0]) + "," + std::to_string(v[1]) + "," + std::to_string(v[2]) +
                            ") is not of Dynkin type");
}

TransferResult lattice_rank_transfer(Int r, Int a_degree, Int H_order)
{
    if (a_degree < 0) throw std::invalid_argument("lattice rank transfer needs a >= 0");
    if (H_order < 1) throw std::invalid_argument("|H| must be positive");
    TransferResult t;
    t.value = r - checked_mul(a_degree, H_order);
    t.inconsistent = t.value < 0;
    return t;
}

std::vector<Int> product_decomposition_count(const std::vector<int>& block_counts)
{
    std::vector<Int> out{1};
    for (int s : block_counts) {
        if (s < 1) throw std::invalid_argument("block counts must be >= 1");
        std::vector<Int> next(out.size() + s - 1, 0);
        for (size_t i = 0; i < out.size(); ++i)
            for (int j = 0; j < s; ++j) next[i + j] += out[i];
        out = std::move(next);
    }
    return out;
}

CoverReport cover_report(GroupPtr M, const std::vector<GroupElement>& L)
{
    CoverReport c;
    c.cover_order = subgroup_order(*M, L);
    c.quotient = quotient_by(M, L).group;
    c.note = "M-graded MF is an L-cover of the M/L-graded one; Rouquier dimension is unchanged";
    return c;
}

} // namespace grmf
