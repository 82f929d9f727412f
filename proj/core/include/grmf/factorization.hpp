#pragma once

#include "grmf/jacobi.hpp"
#include "grmf/linalg.hpp"
#include "grmf/ring.hpp"
#include "grmf/table.hpp"

#include <optional>
#include <string>
#include <vector>

namespace grmf {

// Dense matrix of polynomials; rows index the target basis.
struct PolyMatrix {
    int rows = 0, cols = 0, nvars = 0;
    std::vector<Polynomial> data;

    PolyMatrix() = default;
    PolyMatrix(int r, int c, int nv) : rows(r), cols(c), nvars(nv), data((size_t)r * c, Polynomial(nv)) {}
    static PolyMatrix identity(int n, int nv);

    Polynomial& operator()(int i, int j) { return data[(size_t)i * cols + j]; }
    const Polynomial& operator()(int i, int j) const { return data[(size_t)i * cols + j]; }

    PolyMatrix operator*(const PolyMatrix& o) const;
    PolyMatrix operator+(const PolyMatrix& o) const;
    PolyMatrix operator-(const PolyMatrix& o) const;
    PolyMatrix operator-() const { return scaled(-1); }
    PolyMatrix scaled(const Rational& c) const;
    PolyMatrix transpose() const;
    PolyMatrix remap(int new_nvars, const std::vector<int>& map) const;
    bool is_zero() const;
    bool operator==(const PolyMatrix& o) const { return rows == o.rows && cols == o.cols && data == o.data; }
};
// [[A, B], [C, D]]
PolyMatrix pm_block(const PolyMatrix& A, const PolyMatrix& B, const PolyMatrix& C, const PolyMatrix& D);

// Twist labels: the basis element i generates A(mu_i), so it sits in degree -mu_i.
struct GradedFreeModule {
    std::vector<GroupElement> degrees;
    int rank() const { return (int)degrees.size(); }
};

struct Factorization {
    Potential w;
    GradedFreeModule E_minus1, E_0;
    PolyMatrix phi_0;      // E_{-1} -> E_0, entry (i,j) of degree mu0_i - mu1_j
    PolyMatrix phi_minus1; // E_0 -> E_{-1}, entry (i,j) of degree mu1_i + d - mu0_j
    // Truncated infinite-rank objects: columns flagged here were not computed.
    std::vector<char> partial_minus1, partial_0;

    static Factorization make(const Potential& w, std::vector<GroupElement> E_minus1, std::vector<GroupElement> E_0,
                              PolyMatrix phi_0, PolyMatrix phi_minus1);
    int nvars() const { return w.ring->nvars(); }
    bool is_truncated() const { return !partial_minus1.empty() || !partial_0.empty(); }
    bool operator==(const Factorization& o) const;
};

struct ValidationReport {
    bool ok = true;
    std::string kind; // "shape", "degree", "composition"
    std::string message;
};
ValidationReport validate(const Factorization& F);

// Rank one (phi_0, phi_minus1) with E_0 = A(0); degrees read off phi_0.
Factorization rank_one(const Potential& w, const Polynomial& phi_0, const Polynomial& phi_minus1);
// Koszul factorization of w = sum f_i g_i on the exterior algebra of e_1..e_n:
// phi = sum f_i (e_i ∧ -) + g_i (e_i ⌟ -), even wedge degrees in E_0.
// deg_f gives the degree of each f_i (needed when f_i = 0).
Factorization koszul_factorization(const Potential& w, const std::vector<Polynomial>& f, const std::vector<Polynomial>& g,
                                   const std::vector<GroupElement>& deg_f);

Factorization shift(const Factorization& F);
Factorization twist(const Factorization& F, const GroupElement& m);
Factorization direct_sum(const Factorization& F, const Factorization& G);
// Replace the basis of one component (-1 or 0) by g = 1 + p e_ij, p of degree mu_i - mu_j.
Factorization elementary_conjugate(const Factorization& F, int component, int i, int j, const Polynomial& p);
// F with E_{-1} conjugated by -1, i.e. both maps negated.
Factorization negate_maps(const Factorization& F);

// Degree-0 morphism E -> F: pair of maps with entries of degree mu^F_i - mu^E_j.
struct Morphism {
    PolyMatrix f_minus1, f_0;
};
Morphism zero_morphism(const Factorization& E, const Factorization& F);
Morphism identity_morphism(const Factorization& E);
Morphism compose(const Morphism& g, const Morphism& f, int nvars); // g after f
bool has_degree_zero(const Factorization& E, const Factorization& F, const Morphism& f);
bool is_closed(const Factorization& E, const Factorization& F, const Morphism& f);

struct Cone {
    Factorization C;
    Morphism incl; // F -> C
    Morphism proj; // C -> E[1]
};
Cone cone(const Factorization& E, const Factorization& F, const Morphism& f);

// Potential over the tensor ring is E.w boxplus F.w.  Pass `target` to reuse
// a tensor ring built earlier (needed to compare several box products).
Factorization box(const Factorization& E, const Factorization& F, const std::optional<Potential>& target = {});
Factorization dual(const Factorization& F);

struct Presentation {
    PolyMatrix matrix; // phi_0
    std::vector<GroupElement> generators, relations; // twists of E_0 and E_{-1}
    bool is_zero = false; // phi_0 surjective, detected on constant terms
};
Presentation cokernel_presentation(const Factorization& F);

// Chain E[l] -> E[l-1] -> ... -> E[0]; maps[i-1] : E[i] -> E[i-1].  Blocks
// are E[i][i] in the order i = l, ..., 0.
Factorization totalize(const std::vector<Factorization>& objects, const std::vector<Morphism>& maps);

// One graded slice of Hom^t(E, F) in internal degree m (maps into F(m)).
struct HomSpace {
    struct Block {
        int src, tgt;        // components: -1 or 0
        GroupElement lambda; // twist applied to the target
        int rows = 0, cols = 0;
        std::vector<int> offset;      // rows*cols + 1 entries
        std::vector<SlicePtr> slices; // rows*cols
    };
    int t = 0;
    GroupElement m;
    Block blocks[2];
    int dim = 0;
};
HomSpace hom_space(const Factorization& E, const Factorization& F, const GroupElement& m, int t);
// Differential Hom^t_m -> Hom^{t+1}_m as a matrix.
RationalMatrix hom_differential(const Factorization& E, const Factorization& F, const HomSpace& src, const HomSpace& dst);
RVec hom_coordinates(const HomSpace& H, const PolyMatrix& first, const PolyMatrix& second);
std::pair<PolyMatrix, PolyMatrix> hom_element(const HomSpace& H, const RVec& v, int nvars);

std::vector<int> hom_cohomology(const Factorization& E, const Factorization& F, const GroupElement& m, int t_lo, int t_hi);
DimensionTable hom_table(const Factorization& E, const Factorization& F, const std::vector<GroupElement>& ms,
                         int t_lo, int t_hi);

struct NullHomotopy {
    bool null_homotopic = false;
    PolyMatrix h_0;       // E_0 -> E_{-1}
    PolyMatrix h_minus1;  // E_{-1} -> E_0
    bool verified = false; // phi h + h phi = p re-checked by substitution
};
// Graded: search the degree deg(p) slice of Hom^{-1}.  Ungraded: ignore the
// grading and allow every monomial up to the witness-degree bound.
NullHomotopy null_homotopy(const Factorization& F, const Polynomial& p);
NullHomotopy null_homotopy_ungraded(const Factorization& F, const Polynomial& p, Int witness_bound);
bool verify_null_homotopy(const Factorization& F, const Polynomial& p, const NullHomotopy& h);

// Span of the homogeneous p with witness degree <= bound that are
// null-homotopic on every probe.
GradedIdealSpec estimate_annihilator(const Potential& w, const std::vector<Factorization>& probes, Int witness_bound);

// Δ over (A ⊗ A, -w ⊞ w, M ⊟ M); needs M/(d) finite.
struct Diagonal {
    Factorization F;
    std::vector<Polynomial> Delta; // w(x) - w(y) = sum Delta_i (x_i - y_i)
    std::vector<GroupElement> classes; // lifts of M/(d) used for the f_j
};
Diagonal diagonal(const Potential& w);
// w(x) - w(y) telescoped in the variable order; polynomials over the tensor ring.
std::vector<Polynomial> telescoping_differences(const Potential& w, const Potential& tensor);

// Cohomology of Hom(Δ, s^*A(m)) per (m, t).
DimensionTable hh_bruteforce(const Potential& w, const std::vector<GroupElement>& ms, int t_lo, int t_hi);
struct HHComplexSlice {
    std::vector<int> dims;           // C^t for t in [t_lo - 1, t_hi + 1]
    std::vector<int> ranks;          // rank of C^t -> C^{t+1}, same index
};
HHComplexSlice hh_complex_slice(const Diagonal& D, const Potential& w, const GroupElement& m, int t_lo, int t_hi);

// Φ_K(E) for K over (A ⊗ B, -w ⊞ v, M ⊟ N) and E over (A, w, M), truncated
// to generators of witness degree at most `cap`; rows up to cap + margin.
Factorization integral_transform(const Factorization& K, const Factorization& E, const Potential& v, Int cap);
// Witness cap large enough for Hom(G, Φ) in the given window.
Int transform_cap(const Factorization& G, const std::vector<GroupElement>& ms, int t_lo, int t_hi);

} // namespace grmf
