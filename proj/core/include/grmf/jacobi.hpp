#pragma once

#include "grmf/linalg.hpp"
#include "grmf/ring.hpp"

#include <optional>

namespace grmf {

// Homogeneous generators with their degrees; zero generators are dropped.
struct GradedIdealSpec {
    RingPtr ring;
    std::vector<Polynomial> gens;
    std::vector<GroupElement> degrees;

    static GradedIdealSpec make(RingPtr ring, const std::vector<Polynomial>& gens);
    GradedIdealSpec operator+(const GradedIdealSpec& o) const;
};

GradedIdealSpec jacobian_ideal(const Potential& w);
// All monomials of the given degree, e.g. I_{>=2} in a standard graded ring.
GradedIdealSpec monomial_ideal(RingPtr ring, const GroupElement& m);

// Columns: gens[i] times each monomial of A_{m - deg gens[i]}; rows: A_m.
RationalMatrix multiplication_matrix(const GradedRing& R, const std::vector<Polynomial>& gens,
                                     const std::vector<GroupElement>& degrees, const GroupElement& m);
RVec coefficient_vector(const SliceBasis& S, const Polynomial& p);

int jacobian_slice_dim(const Potential& w, const GroupElement& m);
int quotient_slice_dim(const GradedIdealSpec& I, const GroupElement& m);

// H^j, j in [-c, 0], of the Koszul complex of (f_1..f_c) in degree m, with
// e_i of degree deg f_i and H^0 = (A/(f))_m.  Zero entries are allowed and
// then need their nominal degree.
struct KoszulSlice {
    FiniteComplex complex; // complex.dims[k] is position k - c
    int c = 0;
};
KoszulSlice koszul_slice(const GradedRing& R, const std::vector<Polynomial>& seq,
                         const std::vector<GroupElement>& degrees, const GroupElement& m);
int koszul_cohomology_dim(const GradedRing& R, const std::vector<Polynomial>& seq,
                          const std::vector<GroupElement>& degrees, const GroupElement& m, int j);
std::vector<int> koszul_cohomology_dims(const GradedRing& R, const std::vector<Polynomial>& seq,
                                        const std::vector<GroupElement>& degrees, const GroupElement& m);
// The partial derivatives of w with nominal degrees d - deg x_i.
std::vector<GroupElement> jacobian_degrees(const Potential& w);

struct Membership {
    bool member = false;
    std::vector<Polynomial> certificate; // p = sum certificate[i] * gens[i]
};
Membership ideal_membership(const Polynomial& p, const GradedIdealSpec& I);

struct EulerCheck {
    bool holds = false;
    bool degenerate = false; // w = 0
    std::vector<Polynomial> certificate;
};
EulerCheck euler_condition(const Potential& w);

// Witness degree of the socle of the Jacobian ring, sum over i of (d - 2 d_i).
Int socle_witness_degree(const Potential& w);

// Least n >= 1 with p^n in (dw) + I, searching n up to `bound` (default:
// derived from the socle degree).  nullopt if not reached.
std::optional<int> nilpotent_order(const Polynomial& p, const Potential& w, const GradedIdealSpec& I,
                                   std::optional<int> bound = {});

// Jacobian ring vanishes above the socle, checked on a band of degrees one
// variable-degree wide.
bool is_isolated(const Potential& w);

// Every monomial whose witness degree is in [lo, hi], grouped by degree.
std::vector<std::pair<GroupElement, std::vector<Monomial>>> monomials_by_degree(const GradedRing& R, Int lo, Int hi);

} // namespace grmf
