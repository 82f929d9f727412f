#pragma once

#include "grmf/jacobi.hpp"
#include "grmf/orlov.hpp"

#include <optional>
#include <string>
#include <vector>

namespace grmf {

// e(S): s + 1 for A_s, s for D_s and E_s.
int ade_e_value(const std::string& label);

struct PartInfo {
    std::vector<int> indices; // positions in the weight sequence
    std::vector<Int> weights;
    Int a_degree = 0;         // lcm * (-1 + sum 1/d)
    bool nonpositive = false;
    bool admissible = false;  // {2..2,a}, {2..2,3,3}, {2..2,3,4}, {2..2,3,5}
};

struct PartitionReport {
    std::vector<PartInfo> parts;
    Int score = 0;
};

struct BoundsReport {
    std::optional<Int> lower, upper;
    std::optional<PartitionReport> lower_witness, upper_witness;
    Int lower_raw = 0; // before clamping at 0
    std::string verdict; // "determined" iff lower == upper
    std::string hypotheses;
};

PartInfo describe_part(const std::vector<Int>& weights, std::vector<int> indices);
bool admissible_part(std::vector<Int> weights);
bool nonpositive(const std::vector<Int>& weights);

// Multiset search: equal weights are interchangeable.
std::optional<PartitionReport> fermat_upper_bound(const WeightSequence& s);
PartitionReport fermat_lower_bound(const WeightSequence& s);
// Plain enumeration of all set partitions of the positions.
std::optional<Int> fermat_upper_bound_bruteforce(const WeightSequence& s);
Int fermat_lower_bound_bruteforce(const WeightSequence& s);

BoundsReport fermat_bounds(const WeightSequence& s);
BoundsReport ade_tensor_bounds(const std::vector<std::string>& labels);

// Nonpositive and contains {2}, {3,3}, {3,4} or {3,5} as a sub-multiset.
bool minimizing_test(const WeightSequence& s);

// floor((n + 1)(d - 2) / 2i)
Int nl_floor(Int n, Int d, Int i);

struct NLResult {
    int value = 0;
    int order = 0;
    bool degenerate = false; // p already lies in (dw) + I
};
// nilpotent order of p modulo (dw) + I, minus one.
NLResult nl_dimension_principal(const Potential& w, const Polynomial& p, const GradedIdealSpec& I,
                                std::optional<int> bound = {});

} // namespace grmf
