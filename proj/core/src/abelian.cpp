#include "grmf/abelian.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace grmf {

Int checked_add(Int a, Int b)
{
    Int r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in group arithmetic");
    return r;
}

Int checked_mul(Int a, Int b)
{
    Int r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in group arithmetic");
    return r;
}

Int floor_div(Int a, Int b)
{
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}

Int pos_mod(Int a, Int b)
{
    Int r = a % b;
    return r < 0 ? r + (b < 0 ? -b : b) : r;
}

Int gcd_int(Int a, Int b)
{
    a = a < 0 ? -a : a;
    b = b < 0 ? -b : b;
    while (b) {
        Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

Int lcm_int(Int a, Int b)
{
    if (a == 0 || b == 0)
        return 0;
    Int g = gcd_int(a, b);
    Int r = checked_mul(a / g, b);
    return r < 0 ? -r : r;
}

static IntMat identity_mat(int n)
{
    IntMat I(n, IntVec(n, 0));
    for (int i = 0; i < n; ++i)
        I[i][i] = 1;
    return I;
}

SmithForm smith_normal_form(const IntMat& Ain, int cols)
{
    const int k = (int)Ain.size();
    const int n = cols >= 0 ? cols : (k ? (int)Ain[0].size() : 0);
    IntMat A = Ain;
    for (auto& r : A)
        if ((int)r.size() != n)
            throw std::invalid_argument("smith_normal_form: ragged matrix");
    SmithForm S;
    S.U = identity_mat(k);
    S.V = identity_mat(n);
    S.V_inv = identity_mat(n);

    auto swap_rows = [&](int a, int b) {
        if (a == b) return;
        std::swap(A[a], A[b]);
        std::swap(S.U[a], S.U[b]);
    };
    auto swap_cols = [&](int a, int b) {
        if (a == b) return;
        for (auto& r : A) std::swap(r[a], r[b]);
        for (auto& r : S.V) std::swap(r[a], r[b]);
        std::swap(S.V_inv[a], S.V_inv[b]);
    };
    // row_dst += q * row_src
    auto add_row = [&](int dst, int src, Int q) {
        if (!q) return;
        for (int j = 0; j < n; ++j) A[dst][j] = checked_add(A[dst][j], checked_mul(q, A[src][j]));
        for (int j = 0; j < k; ++j) S.U[dst][j] = checked_add(S.U[dst][j], checked_mul(q, S.U[src][j]));
    };
    // col_dst += q * col_src ; V_inv row_src -= q * row_dst
    auto add_col = [&](int dst, int src, Int q) {
        if (!q) return;
        for (int i = 0; i < k; ++i) A[i][dst] = checked_add(A[i][dst], checked_mul(q, A[i][src]));
        for (int i = 0; i < n; ++i) S.V[i][dst] = checked_add(S.V[i][dst], checked_mul(q, S.V[i][src]));
        for (int j = 0; j < n; ++j)
            S.V_inv[src][j] = checked_add(S.V_inv[src][j], checked_mul(-q, S.V_inv[dst][j]));
    };

    int t = 0;
    for (; t < std::min(k, n); ++t) {
        bool any = false;
        for (;;) {
            int bi = -1, bj = -1;
            Int best = 0;
            for (int i = t; i < k; ++i)
                for (int j = t; j < n; ++j) {
                    Int v = A[i][j] < 0 ? -A[i][j] : A[i][j];
                    if (v && (bi < 0 || v < best)) {
                        best = v;
                        bi = i;
                        bj = j;
                    }
                }
            if (bi < 0) break;
            any = true;
            swap_rows(t, bi);
            swap_cols(t, bj);
            bool clean = true;
            for (int i = t + 1; i < k; ++i) {
                if (!A[i][t]) continue;
                add_row(i, t, -(A[i][t] / A[t][t]));
                if (A[i][t]) clean = false;
            }
            for (int j = t + 1; j < n; ++j) {
                if (!A[t][j]) continue;
                add_col(j, t, -(A[t][j] / A[t][t]));
                if (A[t][j]) clean = false;
            }
            if (!clean) continue;
            int bad = -1;
            for (int i = t + 1; i < k && bad < 0; ++i)
                for (int j = t + 1; j < n; ++j)
                    if (A[i][j] % A[t][t]) {
                        bad = i;
                        break;
                    }
            if (bad < 0) break;
            add_row(t, bad, 1);
        }
        if (!any) break;
        if (A[t][t] < 0) {
            for (int j = 0; j < n; ++j) A[t][j] = -A[t][j];
            for (int j = 0; j < k; ++j) S.U[t][j] = -S.U[t][j];
        }
    }
    S.rank = t;
    S.D = A;
    return S;
}

IntMat mat_mul(const IntMat& A, const IntMat& B)
{
    if (A.empty()) return {};
    const size_t inner = B.size();
    const size_t m = inner ? B[0].size() : 0;
    IntMat C(A.size(), IntVec(m, 0));
    for (size_t i = 0; i < A.size(); ++i)
        for (size_t l = 0; l < inner; ++l) {
            if (!A[i][l]) continue;
            for (size_t j = 0; j < m; ++j)
                C[i][j] = checked_add(C[i][j], checked_mul(A[i][l], B[l][j]));
        }
    return C;
}

Int abs_det(IntMat A)
{
    const int n = (int)A.size();
    if (n == 0) return 1;
    auto S = smith_normal_form(A, n);
    if (S.rank < n) return 0;
    Int p = 1;
    for (int i = 0; i < n; ++i) p = checked_mul(p, S.D[i][i]);
    return p;
}

size_t GroupElementHash::operator()(const GroupElement& e) const
{
    size_t h = 1469598103934665603ull;
    for (Int v : e.c) {
        h ^= std::hash<Int>()(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
}

GroupPtr AbelianGroup::quotient(int ambient_rank, const IntMat& relations)
{
    auto G = std::make_shared<AbelianGroup>();
    G->ambient_ = ambient_rank;
    for (auto& r : relations) {
        if ((int)r.size() != ambient_rank)
            throw std::invalid_argument("relation length does not match ambient rank");
        bool nz = std::any_of(r.begin(), r.end(), [](Int v) { return v != 0; });
        if (nz) G->relations_.push_back(r);
    }
    const int n = ambient_rank;
    SmithForm S = smith_normal_form(G->relations_, n);
    std::vector<int> free_cols, tors_cols;
    for (int j = S.rank; j < n; ++j) free_cols.push_back(j);
    for (int i = 0; i < S.rank; ++i)
        if (S.D[i][i] > 1) {
            tors_cols.push_back(i);
            G->torsion_.push_back(S.D[i][i]);
        }
    G->free_rank_ = (int)free_cols.size();
    std::vector<int> sel = free_cols;
    sel.insert(sel.end(), tors_cols.begin(), tors_cols.end());
    G->to_normal_.assign(n, IntVec(sel.size(), 0));
    G->from_normal_.assign(sel.size(), IntVec(n, 0));
    for (size_t s = 0; s < sel.size(); ++s) {
        for (int i = 0; i < n; ++i) G->to_normal_[i][s] = S.V[i][sel[s]];
        G->from_normal_[s] = S.V_inv[sel[s]];
    }
    return G;
}

GroupPtr AbelianGroup::free(int rank)
{
    return quotient(rank, {});
}

GroupPtr AbelianGroup::from_invariants(int free_rank, const IntVec& torsion)
{
    int n = free_rank + (int)torsion.size();
    IntMat rel;
    for (size_t i = 0; i < torsion.size(); ++i) {
        IntVec r(n, 0);
        r[free_rank + i] = torsion[i];
        rel.push_back(r);
    }
    return quotient(n, rel);
}

Int AbelianGroup::order() const
{
    if (!is_finite()) throw std::domain_error("group is infinite");
    return torsion_order();
}

Int AbelianGroup::torsion_order() const
{
    Int p = 1;
    for (Int t : torsion_) p = checked_mul(p, t);
    return p;
}

GroupElement AbelianGroup::zero() const
{
    return GroupElement{IntVec(ngens(), 0)};
}

GroupElement AbelianGroup::generator(int i) const
{
    IntVec c(ngens(), 0);
    c.at(i) = 1;
    return reduce(c);
}

GroupElement AbelianGroup::reduce(IntVec c) const
{
    if ((int)c.size() != ngens()) throw std::invalid_argument("element has wrong coordinate count");
    for (size_t i = 0; i < torsion_.size(); ++i) {
        Int& v = c[free_rank_ + i];
        v = pos_mod(v, torsion_[i]);
    }
    return GroupElement{std::move(c)};
}

GroupElement AbelianGroup::from_ambient(const IntVec& x) const
{
    if ((int)x.size() != ambient_) throw std::invalid_argument("ambient vector has wrong length");
    IntVec c(ngens(), 0);
    for (int j = 0; j < ambient_; ++j) {
        if (!x[j]) continue;
        for (int s = 0; s < ngens(); ++s) c[s] = checked_add(c[s], checked_mul(x[j], to_normal_[j][s]));
    }
    return reduce(std::move(c));
}

IntVec AbelianGroup::to_ambient(const GroupElement& e) const
{
    IntVec x(ambient_, 0);
    for (int s = 0; s < ngens(); ++s) {
        if (!e.c[s]) continue;
        for (int j = 0; j < ambient_; ++j) x[j] = checked_add(x[j], checked_mul(e.c[s], from_normal_[s][j]));
    }
    return x;
}

GroupElement AbelianGroup::add(const GroupElement& a, const GroupElement& b) const
{
    IntVec c(ngens());
    for (int i = 0; i < ngens(); ++i) c[i] = checked_add(a.c[i], b.c[i]);
    return reduce(std::move(c));
}

GroupElement AbelianGroup::sub(const GroupElement& a, const GroupElement& b) const
{
    return add(a, neg(b));
}

GroupElement AbelianGroup::neg(const GroupElement& a) const
{
    IntVec c(ngens());
    for (int i = 0; i < ngens(); ++i) c[i] = -a.c[i];
    return reduce(std::move(c));
}

GroupElement AbelianGroup::scale(Int k, const GroupElement& a) const
{
    IntVec c(ngens());
    for (int i = 0; i < ngens(); ++i) c[i] = checked_mul(k, a.c[i]);
    return reduce(std::move(c));
}

bool AbelianGroup::is_zero(const GroupElement& a) const
{
    return std::all_of(a.c.begin(), a.c.end(), [](Int v) { return v == 0; });
}

bool AbelianGroup::is_torsion(const GroupElement& a) const
{
    for (int i = 0; i < free_rank_; ++i)
        if (a.c[i]) return false;
    return true;
}

Int AbelianGroup::element_order(const GroupElement& a) const
{
    if (!is_torsion(a)) return 0;
    Int o = 1;
    for (size_t i = 0; i < torsion_.size(); ++i) {
        Int t = torsion_[i];
        Int v = a.c[free_rank_ + i];
        o = lcm_int(o, t / gcd_int(t, v));
    }
    return o;
}

std::vector<GroupElement> AbelianGroup::elements() const
{
    if (!is_finite()) throw std::domain_error("cannot enumerate an infinite group");
    std::vector<GroupElement> out;
    IntVec c(ngens(), 0);
    for (;;) {
        out.push_back(GroupElement{c});
        int i = ngens() - 1;
        while (i >= 0) {
            if (++c[i] < torsion_[i]) break;
            c[i] = 0;
            --i;
        }
        if (i < 0) break;
    }
    return out;
}

std::string AbelianGroup::describe() const
{
    std::vector<std::string> parts;
    if (free_rank_ == 1) parts.push_back("Z");
    else if (free_rank_ > 1) parts.push_back("Z^" + std::to_string(free_rank_));
    for (Int t : torsion_) parts.push_back("Z/" + std::to_string(t));
    if (parts.empty()) return "0";
    std::string s = parts[0];
    for (size_t i = 1; i < parts.size(); ++i) s += " ⊕ " + parts[i];
    return s;
}

std::string AbelianGroup::format(const GroupElement& e) const
{
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < e.c.size(); ++i) os << (i ? "," : "") << e.c[i];
    os << ")";
    return os.str();
}

GroupHom::GroupHom(GroupPtr s, GroupPtr t, IntMat m) : source(std::move(s)), target(std::move(t)), matrix(std::move(m))
{
    if ((int)matrix.size() != target->ambient_rank())
        throw std::invalid_argument("hom matrix row count must equal target ambient rank");
    for (auto& r : matrix)
        if ((int)r.size() != source->ambient_rank())
            throw std::invalid_argument("hom matrix column count must equal source ambient rank");
}

GroupHom GroupHom::identity(GroupPtr g)
{
    IntMat I(g->ambient_rank(), IntVec(g->ambient_rank(), 0));
    for (int i = 0; i < g->ambient_rank(); ++i) I[i][i] = 1;
    return GroupHom(g, g, I);
}

GroupHom GroupHom::from_generator_images(GroupPtr s, GroupPtr t, const std::vector<GroupElement>& images)
{
    if ((int)images.size() != s->ngens()) throw std::invalid_argument("need one image per generator");
    IntMat m(t->ambient_rank(), IntVec(s->ambient_rank(), 0));
    for (int k = 0; k < s->ambient_rank(); ++k) {
        IntVec ek(s->ambient_rank(), 0);
        ek[k] = 1;
        GroupElement nk = s->from_ambient(ek);
        GroupElement img = t->zero();
        for (int i = 0; i < s->ngens(); ++i) img = t->add(img, t->scale(nk.c[i], images[i]));
        IntVec col = t->to_ambient(img);
        for (int r = 0; r < t->ambient_rank(); ++r) m[r][k] = col[r];
    }
    GroupHom h(s, t, m);
    if (!h.well_defined()) throw std::invalid_argument("generator images do not define a homomorphism");
    return h;
}

GroupElement GroupHom::apply(const GroupElement& e) const
{
    IntVec x = source->to_ambient(e);
    IntVec y(target->ambient_rank(), 0);
    for (size_t r = 0; r < matrix.size(); ++r)
        for (size_t c = 0; c < x.size(); ++c)
            if (x[c] && matrix[r][c]) y[r] = checked_add(y[r], checked_mul(matrix[r][c], x[c]));
    return target->from_ambient(y);
}

bool GroupHom::well_defined() const
{
    for (auto& rel : source->relations()) {
        IntVec y(target->ambient_rank(), 0);
        for (size_t r = 0; r < matrix.size(); ++r)
            for (size_t c = 0; c < rel.size(); ++c) y[r] = checked_add(y[r], checked_mul(matrix[r][c], rel[c]));
        if (!target->is_zero(target->from_ambient(y))) return false;
    }
    return true;
}

IntMat GroupHom::normal_matrix() const
{
    IntMat m(target->ngens(), IntVec(source->ngens(), 0));
    for (int i = 0; i < source->ngens(); ++i) {
        GroupElement img = apply(source->generator(i));
        for (int r = 0; r < target->ngens(); ++r) m[r][i] = img.c[r];
    }
    return m;
}

Quotient quotient(int ambient_rank, const IntMat& relations)
{
    GroupPtr src = AbelianGroup::free(ambient_rank);
    GroupPtr q = AbelianGroup::quotient(ambient_rank, relations);
    IntMat I(ambient_rank, IntVec(ambient_rank, 0));
    for (int i = 0; i < ambient_rank; ++i) I[i][i] = 1;
    return {q, GroupHom(src, q, I)};
}

Quotient quotient_by(GroupPtr M, const std::vector<GroupElement>& elements)
{
    IntMat rel = M->relations();
    for (auto& e : elements) rel.push_back(M->to_ambient(e));
    GroupPtr q = AbelianGroup::quotient(M->ambient_rank(), rel);
    IntMat I(M->ambient_rank(), IntVec(M->ambient_rank(), 0));
    for (int i = 0; i < M->ambient_rank(); ++i) I[i][i] = 1;
    return {q, GroupHom(M, q, I)};
}

FiniteQuotient finite_quotient_by(GroupPtr M, const GroupElement& d)
{
    Quotient q = quotient_by(M, {d});
    return {q.group, q.projection, q.group->is_finite()};
}

std::pair<GroupElement, GroupElement> BoxMinus::lift(const GroupElement& x) const
{
    IntVec amb = group->to_ambient(x);
    IntVec a(amb.begin(), amb.begin() + M->ambient_rank());
    IntVec b(amb.begin() + M->ambient_rank(), amb.end());
    return {M->from_ambient(a), N->from_ambient(b)};
}

GroupElement BoxMinus::pi(const GroupElement& a, const GroupElement& b) const
{
    return group->add(left.apply(a), right.apply(b));
}

BoxMinus boxminus(GroupPtr M, GroupPtr N, const GroupElement& d, const GroupElement& e)
{
    const int nm = M->ambient_rank(), nn = N->ambient_rank();
    IntMat rel;
    for (auto& r : M->relations()) {
        IntVec v(nm + nn, 0);
        std::copy(r.begin(), r.end(), v.begin());
        rel.push_back(v);
    }
    for (auto& r : N->relations()) {
        IntVec v(nm + nn, 0);
        std::copy(r.begin(), r.end(), v.begin() + nm);
        rel.push_back(v);
    }
    IntVec de(nm + nn, 0);
    IntVec da = M->to_ambient(d), ea = N->to_ambient(e);
    for (int i = 0; i < nm; ++i) de[i] = da[i];
    for (int i = 0; i < nn; ++i) de[nm + i] = -ea[i];
    rel.push_back(de);
    BoxMinus B;
    B.group = AbelianGroup::quotient(nm + nn, rel);
    B.M = M;
    B.N = N;
    B.d = d;
    B.e = e;
    IntMat L(nm + nn, IntVec(nm, 0)), R(nm + nn, IntVec(nn, 0));
    for (int i = 0; i < nm; ++i) L[i][i] = 1;
    for (int i = 0; i < nn; ++i) R[nm + i][i] = 1;
    B.left = GroupHom(M, B.group, L);
    B.right = GroupHom(N, B.group, R);
    return B;
}

TorsionPart torsion_subgroup(GroupPtr M)
{
    GroupPtr H = AbelianGroup::from_invariants(0, M->torsion());
    std::vector<GroupElement> imgs;
    for (size_t i = 0; i < M->torsion().size(); ++i) imgs.push_back(M->generator(M->free_rank() + (int)i));
    return {H, GroupHom::from_generator_images(H, M, imgs)};
}

QZ QZ::make(Int num, Int den)
{
    if (den == 0) throw std::invalid_argument("zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    num = pos_mod(num, den);
    Int g = gcd_int(num, den);
    if (g == 0) g = den;
    return QZ{num / g, den / g};
}

QZ QZ::operator+(const QZ& o) const
{
    Int l = lcm_int(den, o.den);
    return make(checked_add(checked_mul(num, l / den), checked_mul(o.num, l / o.den)), l);
}

QZ QZ::operator-() const
{
    return make(-num, den);
}

std::string QZ::str() const
{
    if (num == 0) return "0";
    return std::to_string(num) + "/" + std::to_string(den);
}

QZ Character::value_on_generator(int i) const
{
    return QZ::make(a.at(i), group->torsion().at(i));
}

bool Character::is_trivial() const
{
    return std::all_of(a.begin(), a.end(), [](Int v) { return v == 0; });
}

std::vector<Character> characters(GroupPtr G)
{
    if (!G->is_finite()) throw std::domain_error("characters: group is infinite");
    std::vector<Character> out;
    for (auto& e : G->elements()) out.push_back(Character{G, e.c});
    return out;
}

QZ pair(const Character& g, const GroupElement& x)
{
    const auto& t = g.group->torsion();
    if (t.empty()) return QZ{};
    Int big = t.back();
    Int s = 0;
    for (size_t i = 0; i < t.size(); ++i)
        s = pos_mod(checked_add(s, checked_mul(checked_mul(g.a[i], x.c.at(i)), big / t[i])), big);
    return QZ::make(s, big);
}

Character add_characters(const Character& a, const Character& b)
{
    IntVec c(a.a.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = pos_mod(a.a[i] + b.a[i], a.group->torsion()[i]);
    return Character{a.group, c};
}

} // namespace grmf
