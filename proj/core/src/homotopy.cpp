#include "grmf/factorization.hpp"

#include <map>

namespace grmf {

static PolyMatrix scalar_matrix(int n, const Polynomial& p)
{
    PolyMatrix S(n, n, p.nvars());
    for (int i = 0; i < n; ++i) S(i, i) = p;
    return S;
}

bool verify_null_homotopy(const Factorization& F, const Polynomial& p, const NullHomotopy& h)
{
    const int n1 = F.E_minus1.rank(), n0 = F.E_0.rank();
    if (h.h_0.rows != n1 || h.h_0.cols != n0 || h.h_minus1.rows != n0 || h.h_minus1.cols != n1) return false;
    PolyMatrix a = F.phi_minus1 * h.h_minus1 + h.h_0 * F.phi_0;
    PolyMatrix b = F.phi_0 * h.h_0 + h.h_minus1 * F.phi_minus1;
    return a == scalar_matrix(n1, p) && b == scalar_matrix(n0, p);
}

NullHomotopy null_homotopy(const Factorization& F, const Polynomial& p)
{
    const GradedRing& R = *F.w.ring;
    const int nv = F.nvars();
    NullHomotopy out;
    if (p.is_zero()) {
        out.null_homotopic = true;
        out.h_0 = PolyMatrix(F.E_minus1.rank(), F.E_0.rank(), nv);
        out.h_minus1 = PolyMatrix(F.E_0.rank(), F.E_minus1.rank(), nv);
        out.verified = verify_null_homotopy(F, p, out);
        return out;
    }
    auto deg = R.degree_of(p);
    if (!deg) throw std::invalid_argument("null_homotopy: p is not homogeneous");
    HomSpace S = hom_space(F, F, *deg, -1), T = hom_space(F, F, *deg, 0);
    RationalMatrix D = hom_differential(F, F, S, T);
    RVec target = hom_coordinates(T, scalar_matrix(F.E_minus1.rank(), p), scalar_matrix(F.E_0.rank(), p));
    auto x = solve_min_norm(D, target);
    if (!x) return out;
    out.null_homotopic = true;
    auto [g, h] = hom_element(S, *x, nv);
    out.h_0 = g;      // E_0 -> E_{-1}
    out.h_minus1 = h; // E_{-1} -> E_0
    out.verified = verify_null_homotopy(F, p, out);
    return out;
}

NullHomotopy null_homotopy_ungraded(const Factorization& F, const Polynomial& p, Int witness_bound)
{
    const GradedRing& R = *F.w.ring;
    const int nv = F.nvars(), n1 = F.E_minus1.rank(), n0 = F.E_0.rank();
    std::vector<Monomial> monos;
    for (auto& [d, ms] : monomials_by_degree(R, 0, witness_bound)) monos.insert(monos.end(), ms.begin(), ms.end());

    // rows: (matrix a or b, entry, monomial)
    std::map<std::tuple<int, int, int, Monomial>, int> row_of;
    auto row = [&](int which, int i, int j, const Monomial& m) {
        auto key = std::make_tuple(which, i, j, m);
        auto it = row_of.find(key);
        if (it != row_of.end()) return it->second;
        int r = (int)row_of.size();
        row_of.emplace(key, r);
        return r;
    };
    struct Entry {
        int row;
        Rational c;
    };
    std::vector<std::vector<Entry>> cols;
    Monomial k(nv);
    auto push = [&](std::vector<Entry>& col, int which, int i, int j, const Polynomial& q, const Monomial& u) {
        for (auto& [t, c] : q.terms()) {
            for (int v = 0; v < nv; ++v) k[v] = t[v] + u[v];
            col.push_back({row(which, i, j, k), c});
        }
    };
    // unknowns: h_0 entries first, then h_minus1; a = phi_{-1} h_{-1} + h_0 phi_0, b = phi_0 h_0 + h_{-1} phi_{-1}
    for (int r = 0; r < n1; ++r)
        for (int c = 0; c < n0; ++c)
            for (auto& u : monos) {
                std::vector<Entry> col;
                for (int q = 0; q < n1; ++q) push(col, 0, r, q, F.phi_0(c, q), u);
                for (int q = 0; q < n0; ++q) push(col, 1, q, c, F.phi_0(q, r), u);
                cols.push_back(std::move(col));
            }
    for (int r = 0; r < n0; ++r)
        for (int c = 0; c < n1; ++c)
            for (auto& u : monos) {
                std::vector<Entry> col;
                for (int q = 0; q < n1; ++q) push(col, 0, q, c, F.phi_minus1(q, r), u);
                for (int q = 0; q < n0; ++q) push(col, 1, r, q, F.phi_minus1(c, q), u);
                cols.push_back(std::move(col));
            }
    std::vector<std::pair<int, Rational>> rhs;
    for (auto& [t, c] : p.terms()) {
        for (int i = 0; i < n1; ++i) rhs.push_back({row(0, i, i, t), c});
        for (int i = 0; i < n0; ++i) rhs.push_back({row(1, i, i, t), c});
    }
    RationalMatrix A((int)row_of.size(), (int)cols.size());
    for (size_t j = 0; j < cols.size(); ++j)
        for (auto& e : cols[j]) A.add(e.row, (int)j, e.c);
    RVec b(row_of.size());
    for (auto& [r, c] : rhs) b[r] += c;

    NullHomotopy out;
    auto x = solve_min_norm(A, b);
    if (!x) return out;
    out.null_homotopic = true;
    out.h_0 = PolyMatrix(n1, n0, nv);
    out.h_minus1 = PolyMatrix(n0, n1, nv);
    size_t idx = 0;
    for (int r = 0; r < n1; ++r)
        for (int c = 0; c < n0; ++c)
            for (auto& u : monos) out.h_0(r, c).add_term(u, (*x)[idx++]);
    for (int r = 0; r < n0; ++r)
        for (int c = 0; c < n1; ++c)
            for (auto& u : monos) out.h_minus1(r, c).add_term(u, (*x)[idx++]);
    out.verified = verify_null_homotopy(F, p, out);
    return out;
}

GradedIdealSpec estimate_annihilator(const Potential& w, const std::vector<Factorization>& probes, Int witness_bound)
{
    if (probes.empty()) throw std::invalid_argument("estimate_annihilator: no probes");
    for (auto& P : probes)
        if (P.w.ring != w.ring || P.w.w != w.w) throw std::invalid_argument("estimate_annihilator: probe over another potential");
    const GradedRing& R = *w.ring;
    const int nv = R.nvars();
    std::vector<Polynomial> gens;
    for (auto& [deg, monos] : monomials_by_degree(R, 0, witness_bound)) {
        // unknowns: p coordinates, then a homotopy per probe; p*1 - d h_i = 0 for all i
        const int np = (int)monos.size();
        std::vector<HomSpace> S, T;
        std::vector<RationalMatrix> D;
        int ncols = np, nrows = 0;
        for (auto& P : probes) {
            S.push_back(hom_space(P, P, deg, -1));
            T.push_back(hom_space(P, P, deg, 0));
            D.push_back(hom_differential(P, P, S.back(), T.back()));
            ncols += S.back().dim;
            nrows += T.back().dim;
        }
        RationalMatrix A(nrows, ncols);
        int roff = 0, coff = np;
        for (size_t i = 0; i < probes.size(); ++i) {
            for (int k = 0; k < np; ++k) {
                Polynomial u = Polynomial::monomial(monos[k]);
                RVec v = hom_coordinates(T[i], scalar_matrix(probes[i].E_minus1.rank(), u),
                                         scalar_matrix(probes[i].E_0.rank(), u));
                for (size_t r = 0; r < v.size(); ++r)
                    if (v[r] != 0) A.add(roff + (int)r, k, v[r]);
            }
            for (int r = 0; r < D[i].rows(); ++r)
                for (auto& [c, val] : D[i].row(r)) A.add(roff + r, coff + c, -val);
            roff += T[i].dim;
            coff += S[i].dim;
        }
        auto K = kernel(A);
        if (K.empty()) continue;
        RationalMatrix proj((int)K.size(), np);
        for (size_t r = 0; r < K.size(); ++r)
            for (int k = 0; k < np; ++k)
                if (K[r][k] != 0) proj.set((int)r, k, K[r][k]);
        auto E = row_echelon(proj);
        for (auto& rw : E.rows) {
            Polynomial g(nv);
            for (auto& [k, c] : rw) g.add_term(monos[k], c);
            gens.push_back(g);
        }
    }
    return GradedIdealSpec::make(w.ring, gens);
}

} // namespace grmf
