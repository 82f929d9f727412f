#include "grmf/poly.hpp"

#include <cctype>
#include <sstream>

namespace grmf {

size_t MonomialHash::operator()(const Monomial& m) const
{
    size_t h = 0xcbf29ce484222325ull;
    for (int e : m) {
        h ^= (size_t)(e + 0x9e37);
        h *= 0x100000001b3ull;
    }
    return h;
}

Polynomial Polynomial::constant(int nvars, const Rational& c)
{
    Polynomial p(nvars);
    p.add_term(Monomial(nvars, 0), c);
    return p;
}

Polynomial Polynomial::variable(int nvars, int i)
{
    Monomial m(nvars, 0);
    m.at(i) = 1;
    return monomial(m);
}

Polynomial Polynomial::monomial(const Monomial& m, const Rational& c)
{
    Polynomial p((int)m.size());
    p.add_term(m, c);
    return p;
}

void Polynomial::add_term(const Monomial& m, const Rational& c)
{
    if ((int)m.size() != nvars_) throw std::invalid_argument("monomial length does not match variable count");
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
        return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

Rational Polynomial::coefficient(const Monomial& m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational Polynomial::constant_term() const
{
    return coefficient(Monomial(nvars_, 0));
}

static void check_same(const Polynomial& a, const Polynomial& b)
{
    if (a.nvars() != b.nvars()) throw std::invalid_argument("polynomials live in different rings");
}

Polynomial& Polynomial::operator+=(const Polynomial& o)
{
    check_same(*this, o);
    for (auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o)
{
    check_same(*this, o);
    for (auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Polynomial Polynomial::operator+(const Polynomial& o) const
{
    Polynomial r = *this;
    r += o;
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const
{
    Polynomial r = *this;
    r -= o;
    return r;
}

Polynomial Polynomial::operator-() const
{
    return scaled(-1);
}

Polynomial Polynomial::scaled(const Rational& c) const
{
    Polynomial r(nvars_);
    if (c == 0) return r;
    for (auto& [m, v] : terms_) r.terms_.emplace_hint(r.terms_.end(), m, v * c);
    return r;
}

Polynomial Polynomial::times_monomial(const Monomial& mono, const Rational& c) const
{
    Polynomial r(nvars_);
    if (c == 0) return r;
    for (auto& [m, v] : terms_) {
        Monomial k = m;
        for (int i = 0; i < nvars_; ++i) k[i] += mono[i];
        r.terms_.emplace_hint(r.terms_.end(), std::move(k), v * c);
    }
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const
{
    check_same(*this, o);
    Polynomial r(nvars_);
    Monomial k(nvars_);
    for (auto& [a, ca] : terms_)
        for (auto& [b, cb] : o.terms_) {
            for (int i = 0; i < nvars_; ++i) k[i] = a[i] + b[i];
            r.add_term(k, ca * cb);
        }
    return r;
}

Polynomial Polynomial::pow(int k) const
{
    if (k < 0) throw std::invalid_argument("negative power");
    Polynomial r = constant(nvars_, 1), b = *this;
    while (k) {
        if (k & 1) r = r * b;
        k >>= 1;
        if (k) b = b * b;
    }
    return r;
}

Polynomial Polynomial::derivative(int i) const
{
    Polynomial r(nvars_);
    for (auto& [m, c] : terms_) {
        if (m[i] == 0) continue;
        Monomial k = m;
        k[i] -= 1;
        r.add_term(k, c * m[i]);
    }
    return r;
}

Polynomial Polynomial::kill_variables(const std::vector<bool>& zero) const
{
    Polynomial r(nvars_);
    for (auto& [m, c] : terms_) {
        bool keep = true;
        for (int i = 0; i < nvars_; ++i)
            if (zero[i] && m[i]) keep = false;
        if (keep) r.terms_.emplace(m, c);
    }
    return r;
}

Polynomial Polynomial::remap(int new_nvars, const std::vector<int>& map) const
{
    Polynomial r(new_nvars);
    Monomial k(new_nvars);
    for (auto& [m, c] : terms_) {
        std::fill(k.begin(), k.end(), 0);
        for (int i = 0; i < nvars_; ++i) {
            if (!m[i]) continue;
            if (map[i] < 0) throw std::invalid_argument("remap drops a variable that occurs");
            k[map[i]] += m[i];
        }
        r.add_term(k, c);
    }
    return r;
}

std::string rational_str(const Rational& q)
{
    return q.get_str();
}

std::string Polynomial::str(const std::vector<std::string>& names) const
{
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Monomial& m = it->first;
        Rational c = it->second;
        bool neg = c < 0;
        if (neg) c = -c;
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        bool is_const = true;
        for (int e : m)
            if (e) is_const = false;
        bool wrote = false;
        if (c != 1 || is_const) {
            os << rational_str(c);
            wrote = true;
        }
        for (int i = 0; i < nvars_; ++i) {
            if (!m[i]) continue;
            if (wrote) os << "*";
            os << names.at(i);
            if (m[i] > 1) os << "^" << m[i];
            wrote = true;
        }
    }
    return os.str();
}

namespace {

struct Parser {
    const std::string& s;
    const std::vector<std::string>& names;
    size_t pos = 0;
    int n;

    Parser(const std::string& text, const std::vector<std::string>& nm) : s(text), names(nm), n((int)nm.size()) {}

    [[noreturn]] void fail(const std::string& what)
    {
        throw ParseError("polynomial parse error at offset " + std::to_string(pos) + ": " + what);
    }
    void skip()
    {
        while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos;
    }
    bool eat(char c)
    {
        skip();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    mpz_class integer()
    {
        skip();
        size_t st = pos;
        while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
        if (st == pos) fail("expected integer");
        return mpz_class(s.substr(st, pos - st));
    }
    Polynomial expr()
    {
        Polynomial r = term();
        for (;;) {
            if (eat('+')) r += term();
            else if (eat('-')) r -= term();
            else break;
        }
        return r;
    }
    Polynomial term()
    {
        Polynomial r = unary();
        for (;;) {
            if (eat('*')) r = r * unary();
            else if (eat('/')) {
                Polynomial q = unary();
                if (q.is_zero()) fail("division by zero");
                bool is_const = q.size() == 1 && q.terms().begin()->first == Monomial(n, 0);
                if (!is_const) fail("division only by constants");
                r = r.scaled(1 / q.terms().begin()->second);
            } else break;
        }
        return r;
    }
    Polynomial unary()
    {
        if (eat('-')) return -unary();
        if (eat('+')) return unary();
        return power();
    }
    Polynomial power()
    {
        Polynomial b = atom();
        if (eat('^')) {
            mpz_class e = integer();
            if (e > 10000) fail("exponent too large");
            b = b.pow((int)e.get_si());
        }
        return b;
    }
    Polynomial atom()
    {
        skip();
        if (pos >= s.size()) fail("unexpected end of input");
        char c = s[pos];
        if (c == '(') {
            ++pos;
            Polynomial r = expr();
            if (!eat(')')) fail("expected ')'");
            return r;
        }
        if (std::isdigit((unsigned char)c)) return Polynomial::constant(n, Rational(integer()));
        if (std::isalpha((unsigned char)c) || c == '_') {
            size_t st = pos;
            while (pos < s.size() && (std::isalnum((unsigned char)s[pos]) || s[pos] == '_')) ++pos;
            std::string id = s.substr(st, pos - st);
            for (int i = 0; i < n; ++i)
                if (names[i] == id) return Polynomial::variable(n, i);
            fail("unknown variable '" + id + "'");
        }
        fail(std::string("unexpected character '") + c + "'");
    }
};

} // namespace

Polynomial parse_polynomial(const std::string& text, const std::vector<std::string>& names)
{
    Parser p(text, names);
    Polynomial r = p.expr();
    p.skip();
    if (p.pos != text.size()) p.fail("trailing input");
    return r;
}

} // namespace grmf
