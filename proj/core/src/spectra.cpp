#include "grmf/spectra.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace grmf {

int ade_e_value(const std::string& label)
{
    auto bad = [&] { return std::invalid_argument("unknown ADE label '" + label + "'"); };
    if (label.size() < 2) throw bad();
    size_t pos = label[1] == '_' ? 2 : 1;
    int s = 0;
    try {
        size_t used = 0;
        s = std::stoi(label.substr(pos), &used);
        if (pos + used != label.size()) throw bad();
    } catch (const std::logic_error&) {
        throw bad();
    }
    switch (label[0]) {
    case 'A':
        if (s >= 1) return s + 1;
        break;
    case 'D':
        if (s >= 4) return s;
        break;
    case 'E':
        if (s >= 6 && s <= 8) return s;
        break;
    }
    throw bad();
}

static Int part_a(const std::vector<Int>& w)
{
    Int m = 1;
    for (Int x : w) m = lcm_int(m, x);
    Int a = -m;
    for (Int x : w) a += m / x;
    return a;
}

bool nonpositive(const std::vector<Int>& weights) { return part_a(weights) <= 0; }

bool admissible_part(std::vector<Int> w)
{
    w.erase(std::remove(w.begin(), w.end(), Int(2)), w.end());
    if (w.size() <= 1) return true; // {2,..,2,a} including a = 2 and the empty tail
    if (w.size() != 2) return false;
    std::sort(w.begin(), w.end());
    return w[0] == 3 && w[1] >= 3 && w[1] <= 5;
}

PartInfo describe_part(const std::vector<Int>& weights, std::vector<int> indices)
{
    PartInfo p;
    std::sort(indices.begin(), indices.end());
    p.indices = std::move(indices);
    for (int i : p.indices) p.weights.push_back(weights[i]);
    p.a_degree = part_a(p.weights);
    p.nonpositive = p.a_degree <= 0;
    p.admissible = admissible_part(p.weights);
    return p;
}

namespace {

// Multiset partitions of `counts`, parts emitted in non-increasing order.
struct MultisetSearch {
    std::vector<Int> values;
    std::vector<int> counts;
    std::function<bool(const std::vector<int>&)> allow; // part filter
    std::function<void(const std::vector<std::vector<int>>&)> visit;
    std::function<bool(const std::vector<std::vector<int>>&)> prune;
    std::vector<std::vector<int>> parts;

    void run()
    {
        std::vector<int> rem = counts;
        std::vector<int> top = counts;
        rec(rem, top);
    }

    void rec(std::vector<int>& rem, const std::vector<int>& bound)
    {
        if (std::all_of(rem.begin(), rem.end(), [](int c) { return c == 0; })) {
            visit(parts);
            return;
        }
        if (prune && prune(parts)) return;
        // the part holding the first remaining value keeps parts canonical:
        // enumerate sub-vectors v <= rem, v <=lex bound, with v[first] > 0
        const int k = (int)rem.size();
        int first = 0;
        while (rem[first] == 0) ++first;
        std::vector<int> v(k, 0);
        std::function<void(int, bool)> pick = [&](int i, bool below) {
            if (i == k) {
                if (v[first] == 0) return;
                if (allow && !allow(v)) return;
                for (int j = 0; j < k; ++j) rem[j] -= v[j];
                parts.push_back(v);
                rec(rem, v);
                parts.pop_back();
                for (int j = 0; j < k; ++j) rem[j] += v[j];
                return;
            }
            const int hi = below ? rem[i] : std::min(rem[i], bound[i]);
            for (int c = hi; c >= 0; --c) {
                if (i < first && c) continue;
                v[i] = c;
                pick(i + 1, below || c < bound[i]);
            }
            v[i] = 0;
        };
        pick(0, false);
    }

    std::vector<Int> weights_of(const std::vector<int>& part) const
    {
        std::vector<Int> w;
        for (size_t j = 0; j < part.size(); ++j) w.insert(w.end(), part[j], values[j]);
        return w;
    }
};

MultisetSearch make_search(const WeightSequence& s)
{
    std::map<Int, int> c;
    for (Int x : s.d) ++c[x];
    MultisetSearch m;
    for (auto& [v, n] : c) m.values.push_back(v), m.counts.push_back(n);
    return m;
}

// Turn count-vector parts back into index sets of the original sequence.
PartitionReport to_report(const WeightSequence& s, const MultisetSearch& m, const std::vector<std::vector<int>>& parts)
{
    std::map<Int, std::vector<int>> pool;
    for (int i = (int)s.d.size() - 1; i >= 0; --i) pool[s.d[i]].push_back(i);
    PartitionReport r;
    for (auto& p : parts) {
        std::vector<int> idx;
        for (size_t j = 0; j < p.size(); ++j)
            for (int c = 0; c < p[j]; ++c) {
                auto& q = pool[m.values[j]];
                idx.push_back(q.back());
                q.pop_back();
            }
        r.parts.push_back(describe_part(s.d, idx));
    }
    std::sort(r.parts.begin(), r.parts.end(),
              [](const PartInfo& a, const PartInfo& b) { return a.indices.front() < b.indices.front(); });
    return r;
}

Int lower_score(const std::vector<std::vector<Int>>& parts)
{
    Int s = 0;
    for (auto& p : parts)
        if (nonpositive(p)) s += (Int)p.size() - 2;
    return s;
}

// All set partitions of {0..n-1} as restricted growth strings.
void set_partitions(int n, const std::function<void(const std::vector<int>&, int)>& visit)
{
    std::vector<int> a(n, 0);
    std::function<void(int, int)> rec = [&](int i, int blocks) {
        if (i == n) {
            visit(a, blocks);
            return;
        }
        for (int b = 0; b <= blocks; ++b) {
            a[i] = b;
            rec(i + 1, std::max(blocks, b + 1));
        }
    };
    if (n == 0) visit(a, 0);
    else rec(0, 0);
}

std::vector<std::vector<Int>> blocks_of(const WeightSequence& s, const std::vector<int>& a, int nb)
{
    std::vector<std::vector<Int>> out(nb);
    for (size_t i = 0; i < a.size(); ++i) out[a[i]].push_back(s.d[i]);
    return out;
}

} // namespace

std::optional<PartitionReport> fermat_upper_bound(const WeightSequence& s)
{
    auto m = make_search(s);
    std::optional<std::vector<std::vector<int>>> best;
    m.allow = [&](const std::vector<int>& v) { return admissible_part(m.weights_of(v)); };
    m.prune = [&](const std::vector<std::vector<int>>& parts) { return best && parts.size() + 1 >= best->size(); };
    m.visit = [&](const std::vector<std::vector<int>>& parts) {
        if (!best || parts.size() < best->size()) best = parts;
    };
    m.run();
    if (!best) return std::nullopt;
    auto r = to_report(s, m, *best);
    r.score = (Int)r.parts.size() - 1;
    return r;
}

PartitionReport fermat_lower_bound(const WeightSequence& s)
{
    auto m = make_search(s);
    std::optional<std::pair<Int, std::vector<std::vector<int>>>> best;
    m.visit = [&](const std::vector<std::vector<int>>& parts) {
        std::vector<std::vector<Int>> w;
        for (auto& p : parts) w.push_back(m.weights_of(p));
        Int sc = lower_score(w);
        if (!best || sc > best->first) best = std::make_pair(sc, parts);
    };
    m.run();
    auto r = to_report(s, m, best->second);
    r.score = best->first;
    return r;
}

std::optional<Int> fermat_upper_bound_bruteforce(const WeightSequence& s)
{
    std::optional<Int> best;
    set_partitions((int)s.d.size(), [&](const std::vector<int>& a, int nb) {
        for (auto& b : blocks_of(s, a, nb))
            if (!admissible_part(b)) return;
        if (!best || nb - 1 < *best) best = nb - 1;
    });
    return best;
}

Int fermat_lower_bound_bruteforce(const WeightSequence& s)
{
    std::optional<Int> best;
    set_partitions((int)s.d.size(), [&](const std::vector<int>& a, int nb) {
        Int sc = lower_score(blocks_of(s, a, nb));
        if (!best || sc > *best) best = sc;
    });
    return *best;
}

static const char* kLowerHypotheses =
    "lower bound: characteristic 0 (or not dividing any weight); tame DM stack with reduced, separated coarse space";

BoundsReport fermat_bounds(const WeightSequence& s)
{
    BoundsReport b;
    auto lw = fermat_lower_bound(s);
    b.lower_raw = lw.score;
    b.lower = std::max<Int>(lw.score, 0);
    b.lower_witness = lw;
    if (auto up = fermat_upper_bound(s)) {
        b.upper = up->score;
        b.upper_witness = up;
    }
    b.verdict = b.upper && *b.lower == *b.upper ? "determined" : "open";
    b.hypotheses = kLowerHypotheses;
    return b;
}

BoundsReport ade_tensor_bounds(const std::vector<std::string>& labels)
{
    if (labels.empty()) throw std::invalid_argument("need at least one ADE factor");
    std::vector<Int> e;
    for (auto& l : labels) e.push_back(ade_e_value(l));
    auto s = WeightSequence::make(e);
    BoundsReport b;
    auto lw = fermat_lower_bound(s);
    b.lower_raw = lw.score;
    b.lower = std::max<Int>(lw.score, 0);
    b.lower_witness = lw;
    b.upper = (Int)labels.size() - 1;
    b.verdict = *b.lower == *b.upper ? "determined" : "open";
    b.hypotheses = "lower bound: characteristic does not divide any e(S_i)";
    return b;
}

bool minimizing_test(const WeightSequence& s)
{
    if (gorenstein_degree(s) > 0) return false;
    std::map<Int, int> c;
    for (Int x : s.d) ++c[x];
    return c[2] >= 1 || c[3] >= 2 || (c[3] >= 1 && (c[4] >= 1 || c[5] >= 1));
}

Int nl_floor(Int n, Int d, Int i)
{
    if (i < 1) throw std::invalid_argument("nl_floor needs i >= 1");
    return floor_div(checked_mul(n + 1, d - 2), 2 * i);
}

NLResult nl_dimension_principal(const Potential& w, const Polynomial& p, const GradedIdealSpec& I, std::optional<int> bound)
{
    auto ord = nilpotent_order(p, w, I, bound);
    if (!ord) throw std::runtime_error("nilpotent order not reached within the search bound");
    NLResult r;
    r.order = *ord;
    r.degenerate = *ord == 1;
    r.value = *ord - 1;
    return r;
}

} // namespace grmf
