#include "grmf/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace grmf {

RationalMatrix::RationalMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows)
{
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
}

RationalMatrix RationalMatrix::identity(int n)
{
    RationalMatrix I(n, n);
    for (int i = 0; i < n; ++i) I.set(i, i, 1);
    return I;
}

RationalMatrix RationalMatrix::from_dense(const std::vector<RVec>& rows, int cols)
{
    if (cols < 0) cols = rows.empty() ? 0 : (int)rows[0].size();
    RationalMatrix A((int)rows.size(), cols);
    for (int i = 0; i < (int)rows.size(); ++i) {
        if ((int)rows[i].size() != cols) throw std::invalid_argument("ragged dense matrix");
        for (int j = 0; j < cols; ++j) A.set(i, j, rows[i][j]);
    }
    return A;
}

Rational RationalMatrix::get(int i, int j) const
{
    auto it = data_.at(i).find(j);
    return it == data_[i].end() ? Rational(0) : it->second;
}

void RationalMatrix::set(int i, int j, const Rational& v)
{
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_) throw std::out_of_range("matrix index out of range");
    if (v == 0) data_[i].erase(j);
    else data_[i][j] = v;
}

void RationalMatrix::add(int i, int j, const Rational& v)
{
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_) throw std::out_of_range("matrix index out of range");
    if (v == 0) return;
    auto [it, fresh] = data_[i].emplace(j, v);
    if (!fresh) {
        it->second += v;
        if (it->second == 0) data_[i].erase(it);
    }
}

size_t RationalMatrix::nnz() const
{
    size_t n = 0;
    for (auto& r : data_) n += r.size();
    return n;
}

RationalMatrix RationalMatrix::transpose() const
{
    RationalMatrix T(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (auto& [j, v] : data_[i]) T.data_[j].emplace_hint(T.data_[j].end(), i, v);
    return T;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& o) const
{
    if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
    RationalMatrix P(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (auto& [k, a] : data_[i])
            for (auto& [j, b] : o.data_[k]) P.add(i, j, a * b);
    return P;
}

RVec RationalMatrix::apply(const RVec& x) const
{
    if ((int)x.size() != cols_) throw std::invalid_argument("vector length mismatch");
    RVec y(rows_);
    for (int i = 0; i < rows_; ++i)
        for (auto& [j, v] : data_[i]) y[i] += v * x[j];
    return y;
}

std::vector<RVec> RationalMatrix::dense() const
{
    std::vector<RVec> D(rows_, RVec(cols_));
    for (int i = 0; i < rows_; ++i)
        for (auto& [j, v] : data_[i]) D[i][j] = v;
    return D;
}

bool RationalMatrix::operator==(const RationalMatrix& o) const
{
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

namespace {

using IntRow = std::vector<std::pair<int, mpz_class>>;

void make_primitive(IntRow& r)
{
    if (r.empty()) return;
    mpz_class g = 0;
    for (auto& [j, v] : r) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) break;
    }
    if (r.front().second < 0) g = -g;
    if (g != 1)
        for (auto& [j, v] : r) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

IntRow integer_row(const std::map<int, Rational>& row)
{
    mpz_class L = 1;
    for (auto& [j, v] : row) mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), v.get_den_mpz_t());
    IntRow r;
    r.reserve(row.size());
    for (auto& [j, v] : row) {
        mpz_class x = L / v.get_den();
        r.emplace_back(j, x * v.get_num());
    }
    make_primitive(r);
    return r;
}

const mpz_class* entry(const IntRow& r, int col)
{
    auto it = std::lower_bound(r.begin(), r.end(), col, [](const auto& e, int c) { return e.first < c; });
    return (it != r.end() && it->first == col) ? &it->second : nullptr;
}

// a*r - b*p, where both contain col and the result drops it
IntRow eliminate(const IntRow& r, const IntRow& p, int col)
{
    mpz_class a = *entry(p, col), b = *entry(r, col);
    mpz_class g = gcd(a, b);
    a /= g;
    b /= g;
    IntRow out;
    out.reserve(r.size() + p.size());
    size_t i = 0, k = 0;
    while (i < r.size() || k < p.size()) {
        if (k == p.size() || (i < r.size() && r[i].first < p[k].first)) {
            out.emplace_back(r[i].first, a * r[i].second);
            ++i;
        } else if (i == r.size() || p[k].first < r[i].first) {
            out.emplace_back(p[k].first, -b * p[k].second);
            ++k;
        } else {
            mpz_class v = a * r[i].second - b * p[k].second;
            if (v != 0) out.emplace_back(r[i].first, std::move(v));
            ++i;
            ++k;
        }
    }
    make_primitive(out);
    return out;
}

// Echelon form keyed by leading column.
std::map<int, IntRow> sparse_echelon(const RationalMatrix& A)
{
    std::vector<IntRow> rows;
    rows.reserve(A.rows());
    for (int i = 0; i < A.rows(); ++i)
        if (!A.row(i).empty()) rows.push_back(integer_row(A.row(i)));
    std::stable_sort(rows.begin(), rows.end(), [](const IntRow& a, const IntRow& b) { return a.size() < b.size(); });
    std::map<int, IntRow> piv;
    for (auto& r : rows) {
        while (!r.empty()) {
            auto it = piv.find(r.front().first);
            if (it == piv.end()) break;
            r = eliminate(r, it->second, r.front().first);
        }
        if (!r.empty()) {
            int c = r.front().first;
            piv.emplace(c, std::move(r));
        }
    }
    return piv;
}

int bareiss_rank(const RationalMatrix& A)
{
    const int n = A.rows(), m = A.cols();
    std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(m));
    for (int i = 0; i < n; ++i) {
        IntRow r = integer_row(A.row(i));
        for (auto& [j, v] : r) a[i][j] = v;
    }
    mpz_class prev = 1;
    int r = 0;
    for (int c = 0; c < m && r < n; ++c) {
        int p = -1;
        for (int i = r; i < n; ++i)
            if (a[i][c] != 0) {
                p = i;
                break;
            }
        if (p < 0) continue;
        std::swap(a[p], a[r]);
        for (int i = r + 1; i < n; ++i) {
            for (int j = c + 1; j < m; ++j) {
                mpz_class v = a[r][c] * a[i][j] - a[i][c] * a[r][j];
                mpz_divexact(a[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        ++r;
    }
    return r;
}

} // namespace

int rank(const RationalMatrix& A)
{
    if (A.rows() == 0 || A.cols() == 0) return 0;
    if (A.rows() <= kDenseThreshold && A.cols() <= kDenseThreshold) return bareiss_rank(A);
    return (int)sparse_echelon(A).size();
}

int rank_naive(const RationalMatrix& A)
{
    auto a = A.dense();
    const int n = A.rows(), m = A.cols();
    int r = 0;
    for (int c = 0; c < m && r < n; ++c) {
        int p = -1;
        for (int i = r; i < n; ++i)
            if (a[i][c] != 0) {
                p = i;
                break;
            }
        if (p < 0) continue;
        std::swap(a[p], a[r]);
        for (int i = r + 1; i < n; ++i) {
            if (a[i][c] == 0) continue;
            Rational f = a[i][c] / a[r][c];
            for (int j = c; j < m; ++j) a[i][j] -= f * a[r][j];
        }
        ++r;
    }
    return r;
}

RowEchelon row_echelon(const RationalMatrix& A)
{
    auto piv = sparse_echelon(A);
    std::vector<int> cols;
    std::vector<IntRow> rows;
    for (auto& [c, r] : piv) {
        cols.push_back(c);
        rows.push_back(std::move(r));
    }
    for (int k = (int)rows.size() - 1; k >= 0; --k)
        for (int q = 0; q < k; ++q)
            if (entry(rows[q], cols[k])) rows[q] = eliminate(rows[q], rows[k], cols[k]);
    RowEchelon E;
    E.pivots = cols;
    for (auto& r : rows) {
        std::map<int, Rational> out;
        Rational lead(r.front().second);
        for (auto& [j, v] : r) out.emplace_hint(out.end(), j, Rational(v) / lead);
        E.rows.push_back(std::move(out));
    }
    return E;
}

std::vector<RVec> kernel(const RationalMatrix& A)
{
    RowEchelon E = row_echelon(A);
    std::vector<bool> is_piv(A.cols(), false);
    for (int c : E.pivots) is_piv[c] = true;
    std::vector<RVec> out;
    for (int f = 0; f < A.cols(); ++f) {
        if (is_piv[f]) continue;
        RVec x(A.cols());
        x[f] = 1;
        for (size_t i = 0; i < E.rows.size(); ++i) {
            auto it = E.rows[i].find(f);
            if (it != E.rows[i].end()) x[E.pivots[i]] = -it->second;
        }
        out.push_back(std::move(x));
    }
    return out;
}

SolveResult solve(const RationalMatrix& A, const RVec& b)
{
    if ((int)b.size() != A.rows()) throw std::invalid_argument("right-hand side length mismatch");
    RationalMatrix Ab(A.rows(), A.cols() + 1);
    for (int i = 0; i < A.rows(); ++i) {
        for (auto& [j, v] : A.row(i)) Ab.set(i, j, v);
        Ab.set(i, A.cols(), b[i]);
    }
    RowEchelon E = row_echelon(Ab);
    SolveResult res;
    if (!E.pivots.empty() && E.pivots.back() == A.cols()) {
        for (auto& y : kernel(A.transpose())) {
            Rational s = 0;
            for (int i = 0; i < A.rows(); ++i) s += y[i] * b[i];
            if (s != 0) {
                res.certificate = y;
                break;
            }
        }
        return res;
    }
    res.consistent = true;
    res.x.assign(A.cols(), 0);
    for (size_t i = 0; i < E.rows.size(); ++i) {
        auto it = E.rows[i].find(A.cols());
        if (it != E.rows[i].end()) res.x[E.pivots[i]] = it->second;
    }
    return res;
}

std::optional<RVec> solve_min_norm(const RationalMatrix& A, const RVec& b)
{
    RationalMatrix At = A.transpose();
    SolveResult s = solve(A * At, b);
    if (!s.consistent) return std::nullopt;
    return At.apply(s.x);
}

bool FiniteComplex::composition_zero() const
{
    for (size_t i = 0; i + 1 < d.size(); ++i)
        if (!(d[i + 1] * d[i]).is_zero()) return false;
    return true;
}

std::vector<int> cohomology_dims(const FiniteComplex& c, bool check)
{
    const int k = (int)c.dims.size();
    if ((int)c.d.size() != std::max(0, k - 1)) throw std::invalid_argument("complex needs one differential between consecutive terms");
    for (int i = 0; i + 1 < k; ++i)
        if (c.d[i].cols() != c.dims[i] || c.d[i].rows() != c.dims[i + 1])
            throw std::invalid_argument("differential shape does not match dimensions");
    if (check && !c.composition_zero()) throw std::invalid_argument("differentials do not compose to zero");
    std::vector<int> rk(c.d.size());
    for (size_t i = 0; i < c.d.size(); ++i) rk[i] = rank(c.d[i]);
    std::vector<int> h(k);
    for (int i = 0; i < k; ++i) {
        int out = i < k - 1 ? rk[i] : 0;
        int in = i > 0 ? rk[i - 1] : 0;
        h[i] = c.dims[i] - out - in;
    }
    return h;
}

} // namespace grmf
