#pragma once

#include "grmf/ring.hpp"

#include <optional>
#include <string>
#include <vector>

namespace grmf {

struct WeightSequence {
    std::vector<Int> d;
    Int m = 1; // lcm

    static WeightSequence make(std::vector<Int> d);
    std::string str() const; // "(2,3,5)"
};

// m (-1 + sum 1/d_i)
Int gorenstein_degree(const WeightSequence& s);

enum class Branch { Fano, CalabiYau, GeneralType };
std::string branch_name(Branch b);

struct OrlovReport {
    Int a_degree = 0;
    Int d_degree = 0; // degree of the potential under the degree map
    Branch branch = Branch::CalabiYau;
    Int H_order = 1;
    std::optional<Int> H_order_combinatorial; // weight-sequence route, when applicable
    Int exceptional_count = 0;                // |a| |H|
    std::string side;                         // "sheaf", "module" or "equivalence"
    std::vector<std::string> objects;         // symbolic labels of the exceptional objects
    std::optional<std::string> dynkin;        // weighted lines with a > 0
    std::string citation;
};

// Maximal grading Z^n / <d_i e_i - d_j e_j>.
OrlovReport orlov_classify(const WeightSequence& s);
// Parameter sum deg x_i - d measured by the free coordinate of M, oriented so
// that d has positive degree.  Throws std::domain_error unless rank M = 1.
OrlovReport orlov_classify(const Potential& w);

// Torsion of Z^n / <d_i e_i - d_j e_j> as the subgroup generated by
// (d_i / d_ij) e_i - (d_j / d_ij) e_j, d_ij = gcd(d_i, d_j).
Int weight_torsion_order(const WeightSequence& s);

struct DynkinLabel {
    char type = 'A';
    int rank = 0; // vertex count
    std::string str() const { return std::string(1, type) + "_" + std::to_string(rank); }
};
// (1,p,q) -> A_{p+q}, (2,2,l) -> A_{l-1}, (2,3,3) -> D_4, (2,3,4) -> E_6,
// (2,3,5) -> E_8; order of the entries is irrelevant.  Anything else throws.
DynkinLabel dynkin_classify(Int p, Int q, Int r);

struct TransferResult {
    Int value = 0;
    bool inconsistent = false; // r - a|H| < 0
};
// r - a|H|; a must be nonnegative.
TransferResult lattice_rank_transfer(Int r, Int a_degree, Int H_order);

// Block sizes of the product decomposition, indexed by the sum of block indices.
std::vector<Int> product_decomposition_count(const std::vector<int>& block_counts);

struct CoverReport {
    Int cover_order = 1;
    GroupPtr quotient;
    std::string note;
};
// L is the subgroup of M generated by the given elements; must be finite.
CoverReport cover_report(GroupPtr M, const std::vector<GroupElement>& L);
// Order of the subgroup generated by torsion elements (throws on a non-torsion one).
Int subgroup_order(const AbelianGroup& M, const std::vector<GroupElement>& gens);

} // namespace grmf
