#pragma once

#include "grmf/abelian.hpp"
#include "grmf/poly.hpp"

#include <memory>
#include <mutex>
#include <optional>
#include <unordered_map>

namespace grmf {

struct Variable {
    std::string name;
    GroupElement degree;
};

struct SliceBasis {
    std::vector<Monomial> monos;
    std::unordered_map<Monomial, int, MonomialHash> index;
    int find(const Monomial& m) const
    {
        auto it = index.find(m);
        return it == index.end() ? -1 : it->second;
    }
    int size() const { return (int)monos.size(); }
};
using SlicePtr = std::shared_ptr<const SliceBasis>;

class GradedRing;
using RingPtr = std::shared_ptr<const GradedRing>;

// Filled in for rings produced by tensor_ring: variables of A come first.
struct TensorInfo {
    BoxMinus grading;
    RingPtr A, B;
    int nA = 0;
};

class GradedRing {
public:
    // witness: integer functional on ambient coordinates of the group that
    // kills all relations and is positive on every variable degree.  When
    // absent a witness is searched for.
    static RingPtr make(GroupPtr group, std::vector<Variable> vars, std::optional<IntVec> ambient_witness = {});

    const GroupPtr& group() const { return group_; }
    const std::vector<Variable>& variables() const { return vars_; }
    int nvars() const { return (int)vars_.size(); }
    std::vector<std::string> names() const;
    const IntVec& witness() const { return witness_; }
    Int witness_of(const GroupElement& e) const;
    Int var_witness(int i) const { return var_witness_[i]; }

    GroupElement monomial_degree(const Monomial& m) const;
    // nullopt when inhomogeneous; throws on the zero polynomial.
    std::optional<GroupElement> degree_of(const Polynomial& p) const;
    bool is_homogeneous_of(const Polynomial& p, const GroupElement& d) const;

    SlicePtr slice(const GroupElement& m) const;
    std::vector<Monomial> monomial_basis(const GroupElement& m) const { return slice(m)->monos; }

    Polynomial zero() const { return Polynomial(nvars()); }
    Polynomial one() const { return Polynomial::constant(nvars(), 1); }
    Polynomial var(int i) const { return Polynomial::variable(nvars(), i); }
    Polynomial parse(const std::string& text) const { return parse_polynomial(text, names()); }
    std::string str(const Polynomial& p) const { return p.str(names()); }

    std::shared_ptr<const TensorInfo> tensor;

private:
    GroupPtr group_;
    std::vector<Variable> vars_;
    IntVec witness_;
    IntVec var_witness_;
    mutable std::mutex cache_mu_;
    mutable std::unordered_map<GroupElement, SlicePtr, GroupElementHash> cache_;
};

struct Potential {
    RingPtr ring;
    Polynomial w;
    GroupElement d;

    // Degree is read off from w, which must be nonzero and homogeneous of non-torsion degree.
    static Potential make(RingPtr ring, const Polynomial& w);
    // Explicit degree; allows w = 0.
    static Potential make(RingPtr ring, const Polynomial& w, const GroupElement& d);
    static Potential parse(RingPtr ring, const std::string& text);

    Potential negated() const { return Potential{ring, -w, d}; }
    const AbelianGroup& group() const { return *ring->group(); }
};

std::vector<Polynomial> jacobian_sequence(const Potential& w);

// -w (sign = -1) or w (sign = +1) boxplus v over M ⊟ N; variables of A then B.
Potential tensor_ring(const Potential& A, const Potential& B, int sign_of_first);

struct KnorrerResult {
    Potential w;
    GroupHom embedding; // old grading group -> new one
};
// w + u^2 + v^2 over M ⊕ Z ⊕ Z / <(d,-2,0),(d,0,-2)>
KnorrerResult knorrer_augment(const Potential& w);
// w + u^2 over M ⊕ Z / <(d,-2)>
KnorrerResult knorrer_augment_single(const Potential& w);

struct FixedRestriction {
    RingPtr subring;                 // the fixed variables only, same grading group
    std::vector<int> fixed;          // indices in the original ring
    std::vector<int> complement;
    std::vector<GroupElement> complement_degrees;
    Polynomial w_g;                  // restricted potential in subring variables
};
// fixed variables: degree pairs to 0 with g under `proj` (M -> M/(d)).
FixedRestriction restrict_to_fixed(const Potential& w, const Character& g, const GroupHom& proj);

// Weighted Fermat sum x_0^{d_0} + ... over the maximal grading group
// Z^n / <d_i e_i - d_j e_j>.
Potential maximally_graded_fermat(const std::vector<Int>& weights);
// Fermat-type sum of the given exponents over Z with the weights lcm/d_i.
Potential z_graded_fermat(const std::vector<Int>& exponents);

} // namespace grmf
