#include "gammaforge/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace gf {

Polynomial Polynomial::constant(int nvars, const Rational& c)
{
    Polynomial p(nvars);
    p.add_term(Exps(nvars, 0), c);
    return p;
}

Polynomial Polynomial::variable(int nvars, int index, int power)
{
    Polynomial p(nvars);
    Exps e(nvars, 0);
    e[index] = power;
    p.add_term(e, Rational(1));
    return p;
}

void Polynomial::add_term(const Exps& e, const Rational& c)
{
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const
{
    Polynomial p(nvars_);
    for (const auto& [e, c] : terms_) p.terms_.emplace(e, -c);
    return p;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b)
{
    Polynomial p = a;
    for (const auto& [e, c] : b.terms_) p.add_term(e, c);
    return p;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
    Polynomial p(a.nvars_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            Polynomial::Exps e(a.nvars_);
            for (int i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
            p.add_term(e, ca * cb);
        }
    }
    return p;
}

Polynomial operator*(const Rational& c, const Polynomial& a)
{
    Polynomial p(a.nvars());
    for (const auto& [e, coeff] : a.terms()) p.add_term(e, c * coeff);
    return p;
}

Polynomial Polynomial::pow(int k) const
{
    Polynomial acc = constant(nvars_, Rational(1));
    for (int i = 0; i < k; ++i) acc *= *this;
    return acc;
}

Polynomial Polynomial::derivative(int var) const
{
    Polynomial p(nvars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Exps d = e;
        d[var] -= 1;
        p.add_term(d, c * Rational(e[var]));
    }
    return p;
}

std::vector<Polynomial> Polynomial::gradient() const
{
    std::vector<Polynomial> g;
    for (int i = 0; i < nvars_; ++i) g.push_back(derivative(i));
    return g;
}

int Polynomial::total_degree() const
{
    int deg = -1;
    for (const auto& [e, c] : terms_) {
        int d = 0;
        for (int v : e) d += v;
        deg = std::max(deg, d);
    }
    return deg;
}

bool Polynomial::is_homogeneous() const
{
    int deg = -2;
    for (const auto& [e, c] : terms_) {
        int d = 0;
        for (int v : e) d += v;
        if (deg == -2) deg = d;
        if (d != deg) return false;
    }
    return true;
}

int Polynomial::degree_in(int var) const
{
    int deg = 0;
    for (const auto& [e, c] : terms_) deg = std::max(deg, e[var]);
    return deg;
}

int Polynomial::order_in(int var) const
{
    int ord = INT32_MAX;
    for (const auto& [e, c] : terms_) ord = std::min(ord, e[var]);
    return terms_.empty() ? 0 : ord;
}

Rational Polynomial::eval(const std::vector<Rational>& x) const
{
    Rational acc(0);
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (int i = 0; i < nvars_; ++i)
            if (e[i]) t *= x[i].pow(e[i]);
        acc += t;
    }
    return acc;
}

std::complex<double> Polynomial::eval(const std::vector<std::complex<double>>& x) const
{
    std::complex<double> acc = 0.0;
    for (const auto& [e, c] : terms_) {
        std::complex<double> t = c.to_double();
        for (int i = 0; i < nvars_; ++i)
            for (int k = 0; k < e[i]; ++k) t *= x[i];
        acc += t;
    }
    return acc;
}

double Polynomial::eval(const std::vector<double>& x) const
{
    double acc = 0.0;
    for (const auto& [e, c] : terms_) {
        double t = c.to_double();
        for (int i = 0; i < nvars_; ++i)
            for (int k = 0; k < e[i]; ++k) t *= x[i];
        acc += t;
    }
    return acc;
}

Polynomial Polynomial::compose(const std::vector<Polynomial>& args) const
{
    int out_vars = args.empty() ? 0 : args.front().nvars();
    Polynomial acc(out_vars);
    for (const auto& [e, c] : terms_) {
        Polynomial t = Polynomial::constant(out_vars, c);
        for (int i = 0; i < nvars_; ++i)
            if (e[i]) t *= args[i].pow(e[i]);
        acc += t;
    }
    return acc;
}

Polynomial Polynomial::truncate(int K) const
{
    Polynomial p(nvars_);
    for (const auto& [e, c] : terms_) {
        int d = 0;
        for (int v : e) d += v;
        if (d <= K) p.add_term(e, c);
    }
    return p;
}

std::string Polynomial::to_string(const std::vector<std::string>& names) const
{
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c.to_string();
        for (int i = 0; i < nvars_; ++i) {
            if (!e[i]) continue;
            os << "*" << (i < int(names.size()) ? names[i] : "x" + std::to_string(i));
            if (e[i] > 1) os << "^" << e[i];
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// expression parser
// ---------------------------------------------------------------------------

namespace {

struct Parser {
    std::string src;
    size_t pos = 0;
    std::vector<std::string> names; // sorted variable names
    bool collecting; // first pass: collect names only

    void skip()
    {
        while (pos < src.size() && std::isspace((unsigned char)src[pos])) ++pos;
    }

    bool eat(char c)
    {
        skip();
        if (pos < src.size() && src[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& what)
    {
        raise(ErrorCode::ParseError, what + " at offset " + std::to_string(pos));
    }

    int var_index(const std::string& name)
    {
        auto it = std::lower_bound(names.begin(), names.end(), name);
        if (collecting) {
            if (it == names.end() || *it != name) names.insert(it, name);
            return 0;
        }
        if (it == names.end() || *it != name) fail("unknown variable " + name);
        return int(it - names.begin());
    }

    Polynomial expr()
    {
        Polynomial p = term();
        for (;;) {
            skip();
            if (eat('+'))
                p += term();
            else if (eat('-'))
                p -= term();
            else
                return p;
        }
    }

    Polynomial term()
    {
        Polynomial p = factor();
        for (;;) {
            skip();
            if (eat('*')) {
                p *= factor();
                continue;
            }
            // implicit multiplication: "2x", "x y", "3(x+y)"
            if (pos < src.size() &&
                (std::isalpha((unsigned char)src[pos]) || src[pos] == '(')) {
                p *= factor();
                continue;
            }
            return p;
        }
    }

    Polynomial factor()
    {
        Polynomial p = atom();
        skip();
        if (eat('^')) {
            skip();
            size_t start = pos;
            while (pos < src.size() && std::isdigit((unsigned char)src[pos])) ++pos;
            if (start == pos) fail("exponent expected");
            int k = std::stoi(src.substr(start, pos - start));
            p = p.pow(k);
        }
        return p;
    }

    Polynomial atom()
    {
        skip();
        int nv = collecting ? 0 : int(names.size());
        if (pos >= src.size()) fail("unexpected end of expression");
        if (eat('(')) {
            Polynomial p = expr();
            if (!eat(')')) fail("missing )");
            return p;
        }
        if (eat('-')) return -atom();
        char c = src[pos];
        if (std::isdigit((unsigned char)c)) {
            size_t start = pos;
            while (pos < src.size() &&
                   (std::isdigit((unsigned char)src[pos]) || src[pos] == '/'))
                ++pos;
            Rational r = Rational::parse(src.substr(start, pos - start));
            return Polynomial::constant(nv, r);
        }
        if (std::isalpha((unsigned char)c) || c == '_') {
            size_t start = pos;
            while (pos < src.size() &&
                   (std::isalnum((unsigned char)src[pos]) || src[pos] == '_'))
                ++pos;
            std::string name = src.substr(start, pos - start);
            int idx = var_index(name);
            if (collecting) return Polynomial(0);
            return Polynomial::variable(nv, idx);
        }
        fail(std::string("unexpected character '") + c + "'");
    }
};

} // namespace

Polynomial parse_polynomial(const std::string& text, std::vector<std::string>& names)
{
    Parser collector{text, 0, {}, true};
    collector.expr();
    collector.skip();
    if (collector.pos != text.size())
        raise(ErrorCode::ParseError, "trailing input in polynomial expression");

    Parser parser{text, 0, collector.names, false};
    Polynomial p = parser.expr();
    names = parser.names;
    return p;
}

// ---------------------------------------------------------------------------
// modular Hessian probe and exact small determinant
// ---------------------------------------------------------------------------

namespace {

constexpr unsigned long long kProbePrime = 2305843009213693951ull; // 2^61 - 1

unsigned long long mulmod(unsigned long long a, unsigned long long b)
{
    return (unsigned long long)((unsigned __int128)a * b % kProbePrime);
}

unsigned long long powmod(unsigned long long a, unsigned long long e)
{
    unsigned long long r = 1;
    while (e) {
        if (e & 1) r = mulmod(r, a);
        a = mulmod(a, a);
        e >>= 1;
    }
    return r;
}

unsigned long long invmod(unsigned long long a) { return powmod(a, kProbePrime - 2); }

unsigned long long rat_mod(const Rational& r)
{
    auto reduce = [](int128 v) {
        long long m = (long long)(v % (int128)kProbePrime);
        if (m < 0) m += (long long)kProbePrime;
        return (unsigned long long)m;
    };
    unsigned long long den = reduce(r.den());
    if (den == 0) raise(ErrorCode::ArithmeticOverflow, "denominator vanishes mod probe prime");
    return mulmod(reduce(r.num()), invmod(den));
}

} // namespace

bool hessian_nonsingular_mod_p(const Polynomial& f, const std::vector<Rational>& x)
{
    int n = f.nvars();
    std::vector<std::vector<unsigned long long>> h(n, std::vector<unsigned long long>(n, 0));
    for (int i = 0; i < n; ++i) {
        Polynomial di = f.derivative(i);
        for (int j = i; j < n; ++j) {
            Rational v = di.derivative(j).eval(x);
            h[i][j] = h[j][i] = rat_mod(v);
        }
    }
    // Gaussian elimination mod p
    unsigned long long det = 1;
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int row = col; row < n; ++row)
            if (h[row][col] != 0) {
                pivot = row;
                break;
            }
        if (pivot < 0) return false;
        if (pivot != col) {
            std::swap(h[pivot], h[col]);
            det = kProbePrime - det;
        }
        det = mulmod(det, h[col][col]);
        unsigned long long inv = invmod(h[col][col]);
        for (int row = col + 1; row < n; ++row) {
            if (h[row][col] == 0) continue;
            unsigned long long f2 = mulmod(h[row][col], inv);
            for (int j = col; j < n; ++j) {
                unsigned long long sub = mulmod(f2, h[col][j]);
                h[row][j] = (h[row][j] + kProbePrime - sub) % kProbePrime;
            }
        }
    }
    return det != 0;
}

Rational rational_det(std::vector<std::vector<Rational>> m)
{
    int n = int(m.size());
    Rational det(1);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int row = col; row < n; ++row)
            if (!m[row][col].is_zero()) {
                pivot = row;
                break;
            }
        if (pivot < 0) return Rational(0);
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (int row = col + 1; row < n; ++row) {
            if (m[row][col].is_zero()) continue;
            Rational f = m[row][col] / m[col][col];
            for (int j = col; j < n; ++j) m[row][j] -= f * m[col][j];
        }
    }
    return det;
}

} // namespace gf
