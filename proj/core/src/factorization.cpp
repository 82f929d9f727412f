#include "grmf/factorization.hpp"

#include <algorithm>
#include <bit>
#include <map>

namespace grmf {

PolyMatrix PolyMatrix::identity(int n, int nv)
{
    PolyMatrix I(n, n, nv);
    for (int i = 0; i < n; ++i) I(i, i) = Polynomial::constant(nv, 1);
    return I;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const
{
    if (cols != o.rows) throw std::invalid_argument("polynomial matrix product shape mismatch");
    PolyMatrix P(rows, o.cols, nvars);
    for (int i = 0; i < rows; ++i)
        for (int k = 0; k < cols; ++k) {
            const Polynomial& a = (*this)(i, k);
            if (a.is_zero()) continue;
            for (int j = 0; j < o.cols; ++j) {
                const Polynomial& b = o(k, j);
                if (!b.is_zero()) P(i, j) += a * b;
            }
        }
    return P;
}

PolyMatrix PolyMatrix::operator+(const PolyMatrix& o) const
{
    if (rows != o.rows || cols != o.cols) throw std::invalid_argument("polynomial matrix sum shape mismatch");
    PolyMatrix S = *this;
    for (size_t k = 0; k < data.size(); ++k) S.data[k] += o.data[k];
    return S;
}

PolyMatrix PolyMatrix::operator-(const PolyMatrix& o) const
{
    return *this + o.scaled(-1);
}

PolyMatrix PolyMatrix::scaled(const Rational& c) const
{
    PolyMatrix S(rows, cols, nvars);
    for (size_t k = 0; k < data.size(); ++k) S.data[k] = data[k].scaled(c);
    return S;
}

PolyMatrix PolyMatrix::transpose() const
{
    PolyMatrix T(cols, rows, nvars);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) T(j, i) = (*this)(i, j);
    return T;
}

PolyMatrix PolyMatrix::remap(int new_nvars, const std::vector<int>& map) const
{
    PolyMatrix R(rows, cols, new_nvars);
    for (size_t k = 0; k < data.size(); ++k) R.data[k] = data[k].remap(new_nvars, map);
    return R;
}

bool PolyMatrix::is_zero() const
{
    for (auto& p : data)
        if (!p.is_zero()) return false;
    return true;
}

PolyMatrix pm_block(const PolyMatrix& A, const PolyMatrix& B, const PolyMatrix& C, const PolyMatrix& D)
{
    const int r1 = A.rows, c1 = A.cols, r2 = D.rows, c2 = D.cols;
    if (B.rows != r1 || B.cols != c2 || C.rows != r2 || C.cols != c1)
        throw std::invalid_argument("block matrix shapes do not fit");
    PolyMatrix M(r1 + r2, c1 + c2, A.nvars);
    for (int i = 0; i < r1; ++i) {
        for (int j = 0; j < c1; ++j) M(i, j) = A(i, j);
        for (int j = 0; j < c2; ++j) M(i, c1 + j) = B(i, j);
    }
    for (int i = 0; i < r2; ++i) {
        for (int j = 0; j < c1; ++j) M(r1 + i, j) = C(i, j);
        for (int j = 0; j < c2; ++j) M(r1 + i, c1 + j) = D(i, j);
    }
    return M;
}

static void require_same_potential(const Potential& a, const Potential& b)
{
    if (a.ring != b.ring || a.w != b.w || a.d != b.d)
        throw std::invalid_argument("factorizations are over different potentials");
}

Factorization Factorization::make(const Potential& w, std::vector<GroupElement> E1, std::vector<GroupElement> E0,
                                  PolyMatrix phi_0, PolyMatrix phi_minus1)
{
    Factorization F{w, {std::move(E1)}, {std::move(E0)}, std::move(phi_0), std::move(phi_minus1), {}, {}};
    return F;
}

bool Factorization::operator==(const Factorization& o) const
{
    return w.ring == o.w.ring && w.w == o.w.w && w.d == o.w.d && E_minus1.degrees == o.E_minus1.degrees &&
           E_0.degrees == o.E_0.degrees && phi_0 == o.phi_0 && phi_minus1 == o.phi_minus1;
}

ValidationReport validate(const Factorization& F)
{
    ValidationReport r;
    const GradedRing& R = *F.w.ring;
    const AbelianGroup& G = *R.group();
    const int n1 = F.E_minus1.rank(), n0 = F.E_0.rank();
    auto fail = [&](const char* kind, const std::string& msg) {
        r.ok = false;
        r.kind = kind;
        r.message = msg;
        return r;
    };
    if (F.phi_0.rows != n0 || F.phi_0.cols != n1)
        return fail("shape", "phi_0 must be " + std::to_string(n0) + "x" + std::to_string(n1));
    if (F.phi_minus1.rows != n1 || F.phi_minus1.cols != n0)
        return fail("shape", "phi_minus1 must be " + std::to_string(n1) + "x" + std::to_string(n0));
    if (F.phi_0.nvars != R.nvars() || F.phi_minus1.nvars != R.nvars())
        return fail("shape", "matrix entries live in a different ring");
    for (int i = 0; i < n0; ++i)
        for (int j = 0; j < n1; ++j) {
            GroupElement want = G.sub(F.E_0.degrees[i], F.E_minus1.degrees[j]);
            if (!R.is_homogeneous_of(F.phi_0(i, j), want))
                return fail("degree", "phi_0(" + std::to_string(i) + "," + std::to_string(j) + ") = " +
                                          R.str(F.phi_0(i, j)) + " is not of degree " + G.format(want));
        }
    for (int i = 0; i < n1; ++i)
        for (int j = 0; j < n0; ++j) {
            GroupElement want = G.sub(G.add(F.E_minus1.degrees[i], F.w.d), F.E_0.degrees[j]);
            if (!R.is_homogeneous_of(F.phi_minus1(i, j), want))
                return fail("degree", "phi_minus1(" + std::to_string(i) + "," + std::to_string(j) + ") = " +
                                          R.str(F.phi_minus1(i, j)) + " is not of degree " + G.format(want));
        }
    auto check = [&](const PolyMatrix& P, const char* name) -> bool {
        for (int i = 0; i < P.rows; ++i)
            for (int j = 0; j < P.cols; ++j) {
                Polynomial want = i == j ? F.w.w : Polynomial(R.nvars());
                if (P(i, j) != want) {
                    fail("composition", std::string(name) + " entry (" + std::to_string(i) + "," + std::to_string(j) +
                                            "): expected " + R.str(want) + ", got " + R.str(P(i, j)));
                    return false;
                }
            }
        return true;
    };
    if (!check(F.phi_0 * F.phi_minus1, "phi_0 * phi_minus1")) return r;
    if (!check(F.phi_minus1 * F.phi_0, "phi_minus1 * phi_0")) return r;
    return r;
}

static std::vector<GroupElement> shifted(const AbelianGroup& G, const std::vector<GroupElement>& v, const GroupElement& m)
{
    std::vector<GroupElement> out;
    for (auto& x : v) out.push_back(G.add(x, m));
    return out;
}

Factorization shift(const Factorization& F)
{
    const AbelianGroup& G = F.w.group();
    return Factorization::make(F.w, F.E_0.degrees, shifted(G, F.E_minus1.degrees, F.w.d), -F.phi_minus1, -F.phi_0);
}

Factorization twist(const Factorization& F, const GroupElement& m)
{
    const AbelianGroup& G = F.w.group();
    Factorization T = F;
    T.E_minus1.degrees = shifted(G, F.E_minus1.degrees, m);
    T.E_0.degrees = shifted(G, F.E_0.degrees, m);
    return T;
}

static std::vector<GroupElement> concat(std::vector<GroupElement> a, const std::vector<GroupElement>& b)
{
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

Factorization direct_sum(const Factorization& F, const Factorization& G)
{
    require_same_potential(F.w, G.w);
    const int nv = F.nvars();
    auto p0 = pm_block(F.phi_0, PolyMatrix(F.phi_0.rows, G.phi_0.cols, nv), PolyMatrix(G.phi_0.rows, F.phi_0.cols, nv), G.phi_0);
    auto p1 = pm_block(F.phi_minus1, PolyMatrix(F.phi_minus1.rows, G.phi_minus1.cols, nv),
                       PolyMatrix(G.phi_minus1.rows, F.phi_minus1.cols, nv), G.phi_minus1);
    return Factorization::make(F.w, concat(F.E_minus1.degrees, G.E_minus1.degrees), concat(F.E_0.degrees, G.E_0.degrees), p0, p1);
}

Factorization elementary_conjugate(const Factorization& F, int component, int i, int j, const Polynomial& p)
{
    const int nv = F.nvars();
    const int n = component == 0 ? F.E_0.rank() : F.E_minus1.rank();
    if (i == j || i < 0 || j < 0 || i >= n || j >= n) throw std::invalid_argument("elementary conjugation needs distinct valid indices");
    PolyMatrix g = PolyMatrix::identity(n, nv), ginv = PolyMatrix::identity(n, nv);
    g(i, j) = p;
    ginv(i, j) = -p;
    Factorization C = F;
    if (component == 0) {
        C.phi_0 = g * F.phi_0;
        C.phi_minus1 = F.phi_minus1 * ginv;
    } else {
        C.phi_0 = F.phi_0 * ginv;
        C.phi_minus1 = g * F.phi_minus1;
    }
    return C;
}

Factorization negate_maps(const Factorization& F)
{
    Factorization C = F;
    C.phi_0 = -F.phi_0;
    C.phi_minus1 = -F.phi_minus1;
    return C;
}

Morphism zero_morphism(const Factorization& E, const Factorization& F)
{
    const int nv = E.nvars();
    return {PolyMatrix(F.E_minus1.rank(), E.E_minus1.rank(), nv), PolyMatrix(F.E_0.rank(), E.E_0.rank(), nv)};
}

Morphism identity_morphism(const Factorization& E)
{
    return {PolyMatrix::identity(E.E_minus1.rank(), E.nvars()), PolyMatrix::identity(E.E_0.rank(), E.nvars())};
}

Morphism compose(const Morphism& g, const Morphism& f, int)
{
    return {g.f_minus1 * f.f_minus1, g.f_0 * f.f_0};
}

bool has_degree_zero(const Factorization& E, const Factorization& F, const Morphism& f)
{
    const GradedRing& R = *E.w.ring;
    const AbelianGroup& G = *R.group();
    auto ok = [&](const PolyMatrix& M, const std::vector<GroupElement>& tgt, const std::vector<GroupElement>& src) {
        if (M.rows != (int)tgt.size() || M.cols != (int)src.size()) return false;
        for (int i = 0; i < M.rows; ++i)
            for (int j = 0; j < M.cols; ++j)
                if (!R.is_homogeneous_of(M(i, j), G.sub(tgt[i], src[j]))) return false;
        return true;
    };
    return ok(f.f_minus1, F.E_minus1.degrees, E.E_minus1.degrees) && ok(f.f_0, F.E_0.degrees, E.E_0.degrees);
}

bool is_closed(const Factorization& E, const Factorization& F, const Morphism& f)
{
    return F.phi_0 * f.f_minus1 == f.f_0 * E.phi_0 && F.phi_minus1 * f.f_0 == f.f_minus1 * E.phi_minus1;
}

Cone cone(const Factorization& E, const Factorization& F, const Morphism& f)
{
    require_same_potential(E.w, F.w);
    if (!has_degree_zero(E, F, f)) throw std::invalid_argument("cone: morphism is not homogeneous of degree 0");
    if (!is_closed(E, F, f)) throw std::invalid_argument("cone: morphism is not closed");
    const int nv = E.nvars();
    const int e1 = E.E_minus1.rank(), e0 = E.E_0.rank(), f1 = F.E_minus1.rank(), f0 = F.E_0.rank();
    const AbelianGroup& G = E.w.group();
    Cone c;
    // C_{-1} = E_0 + F_{-1}, C_0 = E_{-1}(d) + F_0
    auto p0 = pm_block(-E.phi_minus1, PolyMatrix(e1, f1, nv), f.f_0, F.phi_0);
    auto p1 = pm_block(-E.phi_0, PolyMatrix(e0, f0, nv), f.f_minus1, F.phi_minus1);
    c.C = Factorization::make(E.w, concat(E.E_0.degrees, F.E_minus1.degrees),
                              concat(shifted(G, E.E_minus1.degrees, E.w.d), F.E_0.degrees), p0, p1);
    c.incl.f_minus1 = pm_block(PolyMatrix(e0, 0, nv), PolyMatrix(e0, f1, nv), PolyMatrix(f1, 0, nv), PolyMatrix::identity(f1, nv));
    c.incl.f_0 = pm_block(PolyMatrix(e1, 0, nv), PolyMatrix(e1, f0, nv), PolyMatrix(f0, 0, nv), PolyMatrix::identity(f0, nv));
    c.proj.f_minus1 = pm_block(PolyMatrix::identity(e0, nv), PolyMatrix(e0, f1, nv), PolyMatrix(0, e0, nv), PolyMatrix(0, f1, nv));
    c.proj.f_0 = pm_block(PolyMatrix::identity(e1, nv), PolyMatrix(e1, f0, nv), PolyMatrix(0, e1, nv), PolyMatrix(0, f0, nv));
    return c;
}

static PolyMatrix kron(const PolyMatrix& A, const PolyMatrix& B)
{
    PolyMatrix K(A.rows * B.rows, A.cols * B.cols, A.nvars);
    for (int i1 = 0; i1 < A.rows; ++i1)
        for (int j1 = 0; j1 < A.cols; ++j1) {
            const Polynomial& a = A(i1, j1);
            if (a.is_zero()) continue;
            for (int i2 = 0; i2 < B.rows; ++i2)
                for (int j2 = 0; j2 < B.cols; ++j2) {
                    const Polynomial& b = B(i2, j2);
                    if (!b.is_zero()) K(i1 * B.rows + i2, j1 * B.cols + j2) = a * b;
                }
        }
    return K;
}

Factorization box(const Factorization& X, const Factorization& Y, const std::optional<Potential>& target)
{
    Potential T = target ? *target : tensor_ring(X.w, Y.w, 1);
    const auto& info = T.ring->tensor;
    if (!info || info->A != X.w.ring || info->B != Y.w.ring)
        throw std::invalid_argument("box: target ring is not the tensor ring of the factors");
    const int nA = X.nvars(), nB = Y.nvars(), nv = nA + nB;
    std::vector<int> ma(nA), mb(nB);
    for (int i = 0; i < nA; ++i) ma[i] = i;
    for (int i = 0; i < nB; ++i) mb[i] = nA + i;
    if (T.w != X.w.w.remap(nv, ma) + Y.w.w.remap(nv, mb)) throw std::invalid_argument("box: target potential is not the sum");
    auto LX = [&](const PolyMatrix& P) { return P.remap(nv, ma); };
    auto LY = [&](const PolyMatrix& P) { return P.remap(nv, mb); };
    const int x1 = X.E_minus1.rank(), x0 = X.E_0.rank(), y1 = Y.E_minus1.rank(), y0 = Y.E_0.rank();
    auto I = [&](int n) { return PolyMatrix::identity(n, nv); };
    PolyMatrix X0 = LX(X.phi_0), X1 = LX(X.phi_minus1), Y0 = LY(Y.phi_0), Y1 = LY(Y.phi_minus1);

    // P = (X_0 Y_{-1}, X_{-1} Y_0), Q = (X_0 Y_0, X_{-1} Y_{-1}(d))
    auto p0 = pm_block(kron(I(x0), Y0), kron(X0, I(y0)), -kron(X1, I(y1)), kron(I(x1), Y1));
    auto p1 = pm_block(kron(I(x0), Y1), -kron(X0, I(y1)), kron(X1, I(y0)), kron(I(x1), Y0));

    const BoxMinus& bm = info->grading;
    const AbelianGroup& G = *T.ring->group();
    auto pairs = [&](const std::vector<GroupElement>& a, const std::vector<GroupElement>& b, const GroupElement& extra) {
        std::vector<GroupElement> out;
        for (auto& u : a)
            for (auto& v : b) out.push_back(G.add(bm.pi(u, v), extra));
        return out;
    };
    GroupElement zero = G.zero(), dX = bm.pi(X.w.d, Y.w.ring->group()->zero());
    auto P = concat(pairs(X.E_0.degrees, Y.E_minus1.degrees, zero), pairs(X.E_minus1.degrees, Y.E_0.degrees, zero));
    auto Q = concat(pairs(X.E_0.degrees, Y.E_0.degrees, zero), pairs(X.E_minus1.degrees, Y.E_minus1.degrees, dX));
    return Factorization::make(T, P, Q, p0, p1);
}

Factorization dual(const Factorization& F)
{
    const AbelianGroup& G = F.w.group();
    std::vector<GroupElement> E1, E0;
    for (auto& m : F.E_minus1.degrees) E1.push_back(G.sub(G.neg(m), F.w.d));
    for (auto& m : F.E_0.degrees) E0.push_back(G.neg(m));
    return Factorization::make(F.w.negated(), E1, E0, -F.phi_minus1.transpose(), F.phi_0.transpose());
}

Presentation cokernel_presentation(const Factorization& F)
{
    Presentation P;
    P.matrix = F.phi_0;
    P.generators = F.E_0.degrees;
    P.relations = F.E_minus1.degrees;
    RationalMatrix c(F.phi_0.rows, F.phi_0.cols);
    Monomial one(F.nvars(), 0);
    for (int i = 0; i < F.phi_0.rows; ++i)
        for (int j = 0; j < F.phi_0.cols; ++j) c.set(i, j, F.phi_0(i, j).coefficient(one));
    P.is_zero = rank(c) == F.phi_0.rows;
    return P;
}

Factorization totalize(const std::vector<Factorization>& E, const std::vector<Morphism>& f)
{
    if (E.empty()) throw std::invalid_argument("totalize: empty chain");
    if (f.size() + 1 != E.size()) throw std::invalid_argument("totalize: need one map between consecutive objects");
    const int l = (int)E.size() - 1;
    const int nv = E[0].nvars();
    for (int i = 1; i <= l; ++i) {
        require_same_potential(E[i].w, E[0].w);
        if (!has_degree_zero(E[i], E[i - 1], f[i - 1])) throw std::invalid_argument("totalize: map " + std::to_string(i) + " has nonzero degree");
        if (!is_closed(E[i], E[i - 1], f[i - 1])) throw std::invalid_argument("totalize: map " + std::to_string(i) + " is not closed");
        if (i >= 2) {
            Morphism c = compose(f[i - 2], f[i - 1], nv);
            if (!c.f_minus1.is_zero() || !c.f_0.is_zero()) throw std::invalid_argument("totalize: consecutive maps do not compose to zero");
        }
    }
    std::vector<Factorization> B(l + 1);
    for (int i = 0; i <= l; ++i) {
        B[i] = E[i];
        for (int k = 0; k < i; ++k) B[i] = shift(B[i]);
    }
    // offsets in T_{-1}, T_0 with blocks ordered i = l..0
    std::vector<int> off1(l + 1), off0(l + 1);
    int n1 = 0, n0 = 0;
    std::vector<GroupElement> T1, T0;
    for (int i = l; i >= 0; --i) {
        off1[i] = n1;
        off0[i] = n0;
        n1 += B[i].E_minus1.rank();
        n0 += B[i].E_0.rank();
        T1 = concat(T1, B[i].E_minus1.degrees);
        T0 = concat(T0, B[i].E_0.degrees);
    }
    PolyMatrix p0(n0, n1, nv), p1(n1, n0, nv);
    auto put = [](PolyMatrix& dst, int r, int c, const PolyMatrix& src) {
        for (int i = 0; i < src.rows; ++i)
            for (int j = 0; j < src.cols; ++j) dst(r + i, c + j) = src(i, j);
    };
    for (int i = 0; i <= l; ++i) {
        put(p0, off0[i], off1[i], B[i].phi_0);
        put(p1, off1[i], off0[i], B[i].phi_minus1);
    }
    for (int i = 1; i <= l; ++i) {
        if (i % 2) {
            put(p0, off0[i - 1], off1[i], f[i - 1].f_0);
            put(p1, off1[i - 1], off0[i], f[i - 1].f_minus1);
        } else {
            put(p0, off0[i - 1], off1[i], f[i - 1].f_minus1);
            put(p1, off1[i - 1], off0[i], f[i - 1].f_0);
        }
    }
    return Factorization::make(E[0].w, T1, T0, p0, p1);
}

// ---- Hom complexes ----

static const std::vector<GroupElement>& comp(const Factorization& F, int c)
{
    return c == 0 ? F.E_0.degrees : F.E_minus1.degrees;
}

static const std::vector<char>& partial(const Factorization& F, int c)
{
    return c == 0 ? F.partial_0 : F.partial_minus1;
}

HomSpace hom_space(const Factorization& E, const Factorization& F, const GroupElement& m, int t)
{
    require_same_potential(E.w, F.w);
    const GradedRing& R = *E.w.ring;
    const AbelianGroup& G = *R.group();
    HomSpace H;
    H.t = t;
    H.m = m;
    const Int l = floor_div(t, 2);
    GroupElement lam = G.add(G.scale(l, E.w.d), m);
    GroupElement lam1 = G.add(G.scale(l + 1, E.w.d), m);
    if (t % 2 == 0) {
        H.blocks[0] = {-1, -1, lam, 0, 0, {}, {}};
        H.blocks[1] = {0, 0, lam, 0, 0, {}, {}};
    } else {
        H.blocks[0] = {0, -1, lam1, 0, 0, {}, {}};
        H.blocks[1] = {-1, 0, lam, 0, 0, {}, {}};
    }
    int off = 0;
    for (auto& b : H.blocks) {
        const auto& tg = comp(F, b.tgt);
        const auto& sr = comp(E, b.src);
        const auto& part = partial(F, b.tgt);
        b.rows = (int)tg.size();
        b.cols = (int)sr.size();
        b.offset.reserve((size_t)b.rows * b.cols + 1);
        for (int i = 0; i < b.rows; ++i) {
            GroupElement base = G.add(tg[i], b.lambda);
            for (int j = 0; j < b.cols; ++j) {
                auto S = R.slice(G.sub(base, sr[j]));
                if (S->size() && !part.empty() && part[i])
                    throw std::logic_error("Hom slice reaches a truncated generator; raise the transform cap");
                b.offset.push_back(off);
                b.slices.push_back(S);
                off += S->size();
            }
        }
        b.offset.push_back(off);
    }
    H.dim = off;
    return H;
}

namespace {

struct Accumulator {
    const HomSpace& dst;
    RationalMatrix& M;
    int col = 0;
    void add(int blk, int r, int c, const Polynomial& p, const Monomial& u, int sign)
    {
        if (p.is_zero()) return;
        const auto& b = dst.blocks[blk];
        const int e = r * b.cols + c;
        const SliceBasis& S = *b.slices[e];
        Monomial k(u.size());
        for (auto& [t, cf] : p.terms()) {
            for (size_t v = 0; v < k.size(); ++v) k[v] = t[v] + u[v];
            int idx = S.find(k);
            if (idx < 0) throw std::logic_error("Hom differential leaves its slice (inconsistent degrees)");
            M.add(b.offset[e] + idx, col, sign > 0 ? cf : Rational(-cf));
        }
    }
};

} // namespace

RationalMatrix hom_differential(const Factorization& E, const Factorization& F, const HomSpace& src, const HomSpace& dst)
{
    if (dst.t != src.t + 1) throw std::invalid_argument("hom_differential: degrees are not consecutive");
    RationalMatrix M(dst.dim, src.dim);
    Accumulator acc{dst, M};
    const bool even = src.t % 2 == 0;
    const int e1 = E.E_minus1.rank(), e0 = E.E_0.rank(), f1 = F.E_minus1.rank(), f0 = F.E_0.rank();
    for (int blk = 0; blk < 2; ++blk) {
        const auto& b = src.blocks[blk];
        for (int i = 0; i < b.rows; ++i)
            for (int j = 0; j < b.cols; ++j) {
                const int e = i * b.cols + j;
                for (int k = 0; k < b.slices[e]->size(); ++k) {
                    acc.col = b.offset[e] + k;
                    const Monomial& u = b.slices[e]->monos[k];
                    if (even && blk == 0) { // f_{-1}
                        for (int q = 0; q < e0; ++q) acc.add(0, i, q, E.phi_minus1(j, q), u, -1);
                        for (int q = 0; q < f0; ++q) acc.add(1, q, j, F.phi_0(q, i), u, +1);
                    } else if (even) { // f_0
                        for (int q = 0; q < f1; ++q) acc.add(0, q, j, F.phi_minus1(q, i), u, +1);
                        for (int q = 0; q < e1; ++q) acc.add(1, i, q, E.phi_0(j, q), u, -1);
                    } else if (blk == 0) { // g : E_0 -> F_{-1}
                        for (int q = 0; q < e1; ++q) acc.add(0, i, q, E.phi_0(j, q), u, +1);
                        for (int q = 0; q < f0; ++q) acc.add(1, q, j, F.phi_0(q, i), u, +1);
                    } else { // h : E_{-1} -> F_0
                        for (int q = 0; q < f1; ++q) acc.add(0, q, j, F.phi_minus1(q, i), u, +1);
                        for (int q = 0; q < e0; ++q) acc.add(1, i, q, E.phi_minus1(j, q), u, +1);
                    }
                }
            }
    }
    return M;
}

RVec hom_coordinates(const HomSpace& H, const PolyMatrix& first, const PolyMatrix& second)
{
    RVec v(H.dim);
    const PolyMatrix* mats[2] = {&first, &second};
    for (int blk = 0; blk < 2; ++blk) {
        const auto& b = H.blocks[blk];
        const PolyMatrix& P = *mats[blk];
        if (P.rows != b.rows || P.cols != b.cols) throw std::invalid_argument("hom_coordinates: shape mismatch");
        for (int i = 0; i < b.rows; ++i)
            for (int j = 0; j < b.cols; ++j) {
                const int e = i * b.cols + j;
                for (auto& [mono, c] : P(i, j).terms()) {
                    int idx = b.slices[e]->find(mono);
                    if (idx < 0) throw std::invalid_argument("hom_coordinates: entry outside its slice");
                    v[b.offset[e] + idx] = c;
                }
            }
    }
    return v;
}

std::pair<PolyMatrix, PolyMatrix> hom_element(const HomSpace& H, const RVec& v, int nvars)
{
    PolyMatrix out[2];
    for (int blk = 0; blk < 2; ++blk) {
        const auto& b = H.blocks[blk];
        out[blk] = PolyMatrix(b.rows, b.cols, nvars);
        for (int i = 0; i < b.rows; ++i)
            for (int j = 0; j < b.cols; ++j) {
                const int e = i * b.cols + j;
                for (int k = 0; k < b.slices[e]->size(); ++k) out[blk](i, j).add_term(b.slices[e]->monos[k], v[b.offset[e] + k]);
            }
    }
    return {out[0], out[1]};
}

std::vector<int> hom_cohomology(const Factorization& E, const Factorization& F, const GroupElement& m, int t_lo, int t_hi)
{
    std::vector<HomSpace> S;
    for (int t = t_lo - 1; t <= t_hi + 1; ++t) S.push_back(hom_space(E, F, m, t));
    std::vector<int> rk(S.size() - 1);
    for (size_t k = 0; k + 1 < S.size(); ++k) rk[k] = rank(hom_differential(E, F, S[k], S[k + 1]));
    std::vector<int> h;
    for (int t = t_lo; t <= t_hi; ++t) {
        size_t k = t - t_lo + 1;
        h.push_back(S[k].dim - rk[k] - rk[k - 1]);
    }
    return h;
}

DimensionTable hom_table(const Factorization& E, const Factorization& F, const std::vector<GroupElement>& ms, int t_lo, int t_hi)
{
    DimensionTable T(ms, t_lo, t_hi);
    for (size_t i = 0; i < ms.size(); ++i) {
        auto h = hom_cohomology(E, F, ms[i], t_lo, t_hi);
        for (int t = t_lo; t <= t_hi; ++t) T.at(i, t) = h[t - t_lo];
    }
    return T;
}

} // namespace grmf

namespace grmf {

Factorization rank_one(const Potential& w, const Polynomial& a, const Polynomial& b)
{
    auto da = w.ring->degree_of(a);
    if (!da) throw std::invalid_argument("rank_one: phi_0 is not homogeneous");
    const int nv = w.ring->nvars();
    PolyMatrix p0(1, 1, nv), p1(1, 1, nv);
    p0(0, 0) = a;
    p1(0, 0) = b;
    return Factorization::make(w, {w.group().neg(*da)}, {w.group().zero()}, p0, p1);
}

Factorization koszul_factorization(const Potential& w, const std::vector<Polynomial>& f, const std::vector<Polynomial>& g,
                                   const std::vector<GroupElement>& deg_f)
{
    const int n = (int)f.size();
    if ((int)g.size() != n || (int)deg_f.size() != n) throw std::invalid_argument("koszul_factorization: length mismatch");
    if (n > 16) throw std::invalid_argument("koszul_factorization: too many terms");
    const AbelianGroup& G = w.group();
    const int nv = w.ring->nvars();
    // generator e_I sits in degree ceil(|I|/2) d - sum deg f_i
    std::vector<unsigned> even, odd;
    for (unsigned I = 0; I < (1u << n); ++I) (std::popcount(I) % 2 ? odd : even).push_back(I);
    auto order = [](unsigned a, unsigned b) {
        if (std::popcount(a) != std::popcount(b)) return std::popcount(a) < std::popcount(b);
        for (int i = 0; i < 32; ++i)
            if ((a >> i & 1) != (b >> i & 1)) return (a >> i & 1) > (b >> i & 1);
        return false;
    };
    std::sort(even.begin(), even.end(), order);
    std::sort(odd.begin(), odd.end(), order);
    std::map<unsigned, int> pos;
    auto labels = [&](const std::vector<unsigned>& v) {
        std::vector<GroupElement> out;
        for (size_t k = 0; k < v.size(); ++k) {
            pos[v[k]] = (int)k;
            GroupElement deg = G.scale((std::popcount(v[k]) + 1) / 2, w.d);
            for (int i = 0; i < n; ++i)
                if (v[k] >> i & 1) deg = G.sub(deg, deg_f[i]);
            out.push_back(G.neg(deg));
        }
        return out;
    };
    auto L0 = labels(even), L1 = labels(odd);
    PolyMatrix p0((int)even.size(), (int)odd.size(), nv), p1((int)odd.size(), (int)even.size(), nv);
    auto fill = [&](PolyMatrix& P, const std::vector<unsigned>& src) {
        for (size_t c = 0; c < src.size(); ++c) {
            const unsigned I = src[c];
            for (int i = 0; i < n; ++i) {
                const int sign = std::popcount(I & ((1u << i) - 1)) % 2 ? -1 : 1;
                const unsigned J = I ^ (1u << i);
                P(pos.at(J), (int)c) += ((I >> i & 1) ? g[i] : f[i]).scaled(sign);
            }
        }
    };
    fill(p0, odd);
    fill(p1, even);
    return Factorization::make(w, L1, L0, p0, p1);
}

} // namespace grmf
