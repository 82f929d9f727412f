#pragma once

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace grmf {

using Rational = mpq_class;
using Monomial = std::vector<int>;

struct MonomialHash {
    size_t operator()(const Monomial& m) const;
};

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Sparse polynomial over Q; terms keyed by exponent vectors in lexicographic order.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(int nvars) : nvars_(nvars) {}

    static Polynomial constant(int nvars, const Rational& c);
    static Polynomial variable(int nvars, int i);
    static Polynomial monomial(const Monomial& m, const Rational& c = 1);

    int nvars() const { return nvars_; }
    const std::map<Monomial, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }

    void add_term(const Monomial& m, const Rational& c);
    Rational coefficient(const Monomial& m) const;
    Rational constant_term() const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial scaled(const Rational& c) const;
    Polynomial times_monomial(const Monomial& m, const Rational& c = 1) const;
    Polynomial pow(int k) const;
    bool operator==(const Polynomial& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Polynomial derivative(int i) const;
    // Set the variables flagged in `zero` to 0.
    Polynomial kill_variables(const std::vector<bool>& zero) const;
    // Variable i is sent to variable map[i] of a ring with new_nvars variables.
    Polynomial remap(int new_nvars, const std::vector<int>& map) const;

    std::string str(const std::vector<std::string>& names) const;

private:
    int nvars_ = 0;
    std::map<Monomial, Rational> terms_;
};

Polynomial parse_polynomial(const std::string& text, const std::vector<std::string>& names);

std::string rational_str(const Rational& q);

} // namespace grmf
