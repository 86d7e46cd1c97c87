#pragma once

#include <complex>
#include <string>

#include "gammaforge/field.hpp"
#include "gammaforge/rational.hpp"

namespace gf {

/// Multiplicative character lambda_{s,n} : x -> |x|^s (x/|x|)^n of a local
/// field, with exact rational exponent s and integer twist n.
///
/// Twist normalisation: over R the twist is stored reduced mod 2, over C it
/// is an arbitrary integer, and nonarchimedean characters are unramified
/// powers nu^s (twist 0).
struct Character {
    LocalField field;
    Rational s;
    long long n = 0;

    Character() = default;
    Character(LocalField f, Rational s_, long long n_);

    static Character trivial(const LocalField& f) { return Character(f, Rational(0), 0); }

    /// The norm character nu_F = |.|^{dim_R F}: lambda_{1,0} over R,
    /// lambda_{2,0} over C, nu over NonArch.
    static Character nu(const LocalField& f);

    /// The algebraic norm Nm of F over R: lambda_{1,1} over R,
    /// lambda_{2,0} over C.  Not defined for NonArch.
    static Character nm(const LocalField& f);

    bool is_trivial() const { return s.is_zero() && n == 0; }

    friend bool operator==(const Character& a, const Character& b)
    {
        return a.field == b.field && a.s == b.s && a.n == b.n;
    }
    friend bool operator!=(const Character& a, const Character& b) { return !(a == b); }

    std::string to_string() const;
};

Character mul(const Character& a, const Character& b);
Character inv(const Character& a);
Character pow(const Character& a, long long k);

/// Fractional power of the norm character, Nm^r.  Over R the reduced
/// denominator of r must be odd (EvenRootOverReal otherwise) and the twist
/// is the numerator mod 2.  Over C, Nm^{j/N} = lambda_{2j/N,0}; over
/// NonArch, nu^r.
Character nm_power(const LocalField& f, const Rational& r);

/// nu_F^r (always twist 0; over R distinct from Nm^r when r has odd numerator).
Character nu_power(const LocalField& f, const Rational& r);

/// Re(lambda): s over R and NonArch, s/2 over C.
Rational real_part(const Character& a);

/// Singular characters are the pole locations of the character-distribution
/// family: nu^{-1} x^{-n} (n >= 0) over R, nu^{-1} x^{-n} xbar^{-m} over C.
bool is_singular(const Character& a);

/// Strong regularity in the sense of the weak-to-strong criterion: the
/// character generates an irreducible D-module on the line.  Fails over R
/// exactly for x^n/|x| (any integer n) and x^n (n < 0), over C for
/// x^n xbar^m with min(n, m) < 0.
bool is_strongly_regular(const Character& a);

/// Numeric value lambda_{s,n}(x).  Overloads per field; NonArch elements
/// are (valuation, unit class) pairs and only the valuation is used.
std::complex<double> evaluate(const Character& a, double x);
std::complex<double> evaluate(const Character& a, std::complex<double> x);
std::complex<double> evaluate_nonarch(const Character& a, long long valuation);

std::string field_json_tag(const LocalField& f); // helper shared with JSON I/O

} // namespace gf
