#pragma once

#include "grmf/poly.hpp"

#include <map>
#include <optional>
#include <vector>

namespace grmf {

using RVec = std::vector<Rational>;

// Below this many rows and columns rank uses dense Bareiss elimination.
inline constexpr int kDenseThreshold = 64;

class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(int rows, int cols);
    static RationalMatrix identity(int n);
    static RationalMatrix from_dense(const std::vector<RVec>& rows, int cols = -1);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rational get(int i, int j) const;
    void set(int i, int j, const Rational& v);
    void add(int i, int j, const Rational& v);
    const std::map<int, Rational>& row(int i) const { return data_[i]; }
    size_t nnz() const;
    bool is_zero() const { return nnz() == 0; }

    RationalMatrix transpose() const;
    RationalMatrix operator*(const RationalMatrix& o) const;
    RVec apply(const RVec& x) const;
    std::vector<RVec> dense() const;
    bool operator==(const RationalMatrix& o) const;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<std::map<int, Rational>> data_;
};

int rank(const RationalMatrix& A);
// Reference implementation: plain rational Gauss elimination on a dense copy.
int rank_naive(const RationalMatrix& A);

// Reduced row echelon form: rows with pivot columns, pivot entries 1.
struct RowEchelon {
    std::vector<int> pivots;
    std::vector<std::map<int, Rational>> rows;
};
RowEchelon row_echelon(const RationalMatrix& A);

// Basis of {x : A x = 0}.
std::vector<RVec> kernel(const RationalMatrix& A);

struct SolveResult {
    bool consistent = false;
    RVec x;           // a solution when consistent
    RVec certificate; // y with y A = 0 and y b != 0 when inconsistent
};
SolveResult solve(const RationalMatrix& A, const RVec& b);
// The solution of least Euclidean norm, x = A^T y with A A^T y = b.
std::optional<RVec> solve_min_norm(const RationalMatrix& A, const RVec& b);

// 0 -> C^0 -> C^1 -> ... -> C^k -> 0, d[i] : C^i -> C^{i+1}.
struct FiniteComplex {
    std::vector<int> dims;
    std::vector<RationalMatrix> d; // size dims.size() - 1
    bool composition_zero() const;
};
// Throws std::invalid_argument when some composite is nonzero and check is set.
std::vector<int> cohomology_dims(const FiniteComplex& c, bool check = true);

} // namespace grmf
