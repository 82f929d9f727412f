#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace grmf {

using Int = std::int64_t;
using IntVec = std::vector<Int>;
using IntMat = std::vector<IntVec>;

Int checked_add(Int a, Int b);
Int checked_mul(Int a, Int b);
Int floor_div(Int a, Int b);
Int pos_mod(Int a, Int b);
Int gcd_int(Int a, Int b);
Int lcm_int(Int a, Int b);

struct SmithForm {
    IntMat U;     // rows x rows
    IntMat D;     // rows x cols
    IntMat V;     // cols x cols
    IntMat V_inv; // cols x cols
    int rank = 0;
};

// U * A * V = D with D diagonal, nonnegative, ascending divisibility.
SmithForm smith_normal_form(const IntMat& A, int cols = -1);

IntMat mat_mul(const IntMat& A, const IntMat& B);
Int abs_det(IntMat A);

struct GroupElement {
    IntVec c;
    bool operator==(const GroupElement& o) const { return c == o.c; }
    bool operator!=(const GroupElement& o) const { return c != o.c; }
    bool operator<(const GroupElement& o) const { return c < o.c; }
};

struct GroupElementHash {
    size_t operator()(const GroupElement& e) const;
};

class AbelianGroup;
using GroupPtr = std::shared_ptr<const AbelianGroup>;

// Z^n / <relations>, stored in Smith normal form.  Normal coordinates list the
// free part first, then the torsion part in ascending divisibility order.
class AbelianGroup {
public:
    static GroupPtr quotient(int ambient_rank, const IntMat& relations);
    static GroupPtr free(int rank);
    static GroupPtr from_invariants(int free_rank, const IntVec& torsion);

    int free_rank() const { return free_rank_; }
    const IntVec& torsion() const { return torsion_; }
    int ambient_rank() const { return ambient_; }
    const IntMat& relations() const { return relations_; }
    int ngens() const { return free_rank_ + (int)torsion_.size(); }
    bool is_finite() const { return free_rank_ == 0; }
    Int order() const;
    Int torsion_order() const;

    GroupElement zero() const;
    GroupElement generator(int i) const;
    GroupElement reduce(IntVec coords) const;
    GroupElement from_ambient(const IntVec& x) const;
    IntVec to_ambient(const GroupElement& e) const;

    GroupElement add(const GroupElement& a, const GroupElement& b) const;
    GroupElement sub(const GroupElement& a, const GroupElement& b) const;
    GroupElement neg(const GroupElement& a) const;
    GroupElement scale(Int k, const GroupElement& a) const;
    bool is_zero(const GroupElement& a) const;
    bool is_torsion(const GroupElement& a) const;
    // 0 when the element has infinite order.
    Int element_order(const GroupElement& a) const;

    std::vector<GroupElement> elements() const;  // finite groups only
    std::string describe() const;                 // "Z ⊕ Z/3"
    std::string format(const GroupElement& e) const;

private:
    int ambient_ = 0;
    IntMat relations_;
    int free_rank_ = 0;
    IntVec torsion_;
    // normal coord i = sum_j x_j * to_normal_[j][i]
    IntMat to_normal_;   // ambient x ngens
    IntMat from_normal_; // ngens x ambient
};

// Homomorphism given by an integer matrix on ambient (presentation) coordinates:
// image(x) = target.from_ambient(A * x).
class GroupHom {
public:
    GroupHom() = default;
    GroupHom(GroupPtr source, GroupPtr target, IntMat ambient_matrix);
    static GroupHom identity(GroupPtr g);
    // Hom defined by images of the normal-form generators of source.
    static GroupHom from_generator_images(GroupPtr source, GroupPtr target,
                                          const std::vector<GroupElement>& images);

    GroupElement apply(const GroupElement& e) const;
    bool well_defined() const;
    // Matrix in normal-form bases (columns are images of generators).
    IntMat normal_matrix() const;

    GroupPtr source, target;
    IntMat matrix; // target ambient x source ambient
};

struct Quotient {
    GroupPtr group;
    GroupHom projection;
};

Quotient quotient(int ambient_rank, const IntMat& relations);
Quotient quotient_by(GroupPtr M, const std::vector<GroupElement>& elements);

struct FiniteQuotient {
    GroupPtr group;
    GroupHom projection;
    bool is_finite = false;
};
FiniteQuotient finite_quotient_by(GroupPtr M, const GroupElement& d);

struct BoxMinus {
    GroupPtr group;
    GroupPtr M, N;
    GroupElement d, e;
    GroupHom left, right; // M -> M⊟N, N -> M⊟N
    GroupElement image_of_d() const { return left.apply(d); }
    // some (a, b) with pi(a, b) = x
    std::pair<GroupElement, GroupElement> lift(const GroupElement& x) const;
    GroupElement pi(const GroupElement& a, const GroupElement& b) const;
};
BoxMinus boxminus(GroupPtr M, GroupPtr N, const GroupElement& d, const GroupElement& e);

struct TorsionPart {
    GroupPtr H;
    GroupHom inclusion;
};
TorsionPart torsion_subgroup(GroupPtr M);

// Additive Q/Z value num/den, 0 <= num < den.
struct QZ {
    Int num = 0;
    Int den = 1;
    static QZ make(Int num, Int den);
    QZ operator+(const QZ& o) const;
    QZ operator-() const;
    bool operator==(const QZ& o) const { return num == o.num && den == o.den; }
    bool operator<(const QZ& o) const { return num * o.den < o.num * den; }
    bool is_zero() const { return num == 0; }
    std::string str() const;
};

struct Character {
    GroupPtr group;
    IntVec a; // value on generator i is a[i] / torsion[i]
    QZ value_on_generator(int i) const;
    bool is_trivial() const;
};

std::vector<Character> characters(GroupPtr finite_group);
QZ pair(const Character& g, const GroupElement& x);
Character add_characters(const Character& a, const Character& b);

} // namespace grmf
