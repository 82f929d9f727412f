#pragma once

#include "grmf/jacobi.hpp"
#include "grmf/table.hpp"

#include <optional>
#include <string>
#include <vector>

namespace grmf {

// One character g of M/(d) and the data of its fixed locus.
struct SectorData {
    Character g;
    std::vector<int> fixed;
    int n_g = 0, q_g = 0, c_g = 0;
    GroupElement d_g; // sum of fixed degrees
    GroupElement v_g; // minus the sum of complement degrees
    Potential w_g;    // over the subring of fixed variables, degree d
    bool isolated = true;
};

// Throws std::domain_error when M/(d) is infinite.
std::vector<SectorData> enumerate_sectors(const Potential& w);

// RHom^t(Id, (m)): for t = 2l or 2l + 1 and p = c_g + e of the parity of t,
// sum over g and e of H^{-e}(dw_g; A^g) in degree m + d(l - floor(p/2)) - v_g.
int rhom_cell(const std::vector<SectorData>& S, const Potential& w, const GroupElement& m, int t);
std::vector<int> rhom_cell_by_sector(const std::vector<SectorData>& S, const Potential& w, const GroupElement& m, int t);
DimensionTable rhom_table(const Potential& w, const std::vector<GroupElement>& ms, int t_lo, int t_hi);

// Range of t outside which RHom^t(Id, (m)) vanishes; nullopt when some
// fixed-locus potential is not isolated (no bound), empty range as lo > hi.
std::optional<std::pair<int, int>> rhom_support(const std::vector<SectorData>& S, const Potential& w, const GroupElement& m);

// Every degree of witness in [lo, hi], ordered by witness; needs rank M = 1.
std::vector<GroupElement> degrees_in_window(const GradedRing& R, Int lo, Int hi);

// The Serre functor is (m)[t] with m = d - sum deg x_i and t = n - 2.
std::pair<GroupElement, int> serre_cell(const Potential& w);

struct HHResult {
    DimensionTable table;                      // single row, m = 0, columns i
    std::vector<std::vector<int>> by_sector;   // [sector][i - i_lo]
    std::vector<std::string> warnings;
};
// HH_i: sectors with n_g = 2q_g feed even i = 2l, odd n_g feed i = 2l + 1,
// through Jac(w_g) in degree d(q_g - l) - d_g.
HHResult hh_table(const Potential& w, int i_lo, int i_hi);
int hh_sector_dim(const SectorData& s, const Potential& w, int i);

// Additive log of m(g)^{-1} per sector.
std::vector<QZ> twist_action(const std::vector<SectorData>& S, const Potential& w, const GroupElement& m);

struct ResIndReport {
    Int kernel_order = 1;
    std::vector<char> in_G_prime; // g factors through L/(pi d)
    std::vector<Int> scalar;      // (Ind o Res)_* on the sector
};
// pi : M -> L with finite kernel and pi(d) non-torsion.
ResIndReport res_ind_analysis(const std::vector<SectorData>& S, const Potential& w, const GroupHom& pi);

} // namespace grmf
