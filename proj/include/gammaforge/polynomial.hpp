#pragma once

#include <complex>
#include <map>
#include <string>
#include <vector>

#include "gammaforge/rational.hpp"

namespace gf {

/// Multivariate polynomial with exact rational coefficients over a fixed
/// number of variables.  Terms keyed by exponent vectors.
class Polynomial {
public:
    using Exps = std::vector<int>;

    explicit Polynomial(int nvars = 0) : nvars_(nvars) {}

    static Polynomial constant(int nvars, const Rational& c);
    static Polynomial variable(int nvars, int index, int power = 1);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Exps, Rational>& terms() const { return terms_; }

    void add_term(const Exps& e, const Rational& c);

    Polynomial operator-() const;
    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Rational& c, const Polynomial& a);
    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
    friend bool operator==(const Polynomial& a, const Polynomial& b)
    {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

    Polynomial pow(int k) const;
    Polynomial derivative(int var) const;
    std::vector<Polynomial> gradient() const;

    int total_degree() const; // -1 for the zero polynomial
    bool is_homogeneous() const;
    int degree_in(int var) const;
    /// Vanishing order along {x_var = 0}: minimal exponent of var.
    int order_in(int var) const;

    Rational eval(const std::vector<Rational>& x) const;
    std::complex<double> eval(const std::vector<std::complex<double>>& x) const;
    double eval(const std::vector<double>& x) const;

    /// Substitutes polynomials for the variables (args.size() == nvars).
    Polynomial compose(const std::vector<Polynomial>& args) const;

    /// Truncates away terms of total degree > K.
    Polynomial truncate(int K) const;

    std::string to_string(const std::vector<std::string>& names = {}) const;

private:
    int nvars_;
    std::map<Exps, Rational> terms_;
};

/// Parses a small expression grammar: variables (identifiers), integer and
/// rational literals (2, 3/4), + - * ^ and parentheses.  Variables are
/// indexed by sorted name order; names are returned through `names`.
Polynomial parse_polynomial(const std::string& text, std::vector<std::string>& names);

/// det of the Hessian of f at the point x, reduced mod a fixed 62-bit prime
/// (a fast nonvanishing probe for regular Hessians); nullopt when a
/// denominator vanishes mod p.
bool hessian_nonsingular_mod_p(const Polynomial& f, const std::vector<Rational>& x);

/// Exact determinant of a small rational matrix (Gaussian elimination).
Rational rational_det(std::vector<std::vector<Rational>> m);

} // namespace gf
