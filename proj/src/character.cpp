#include "gammaforge/character.hpp"

#include <cmath>

namespace gf {

LocalField LocalField::nonarch(long long q)
{
    if (q < 2 || !is_prime_power(q))
        raise(ErrorCode::UnsupportedField, "residue size must be a prime power >= 2");
    return {FieldKind::NonArch, q};
}

bool is_prime_power(long long q)
{
    if (q < 2) return false;
    for (long long p = 2; p * p <= q; ++p) {
        if (q % p == 0) {
            while (q % p == 0) q /= p;
            return q == 1;
        }
    }
    return true; // q itself prime
}

std::string LocalField::to_string() const
{
    switch (kind) {
    case FieldKind::Real: return "R";
    case FieldKind::Complex: return "C";
    case FieldKind::NonArch: return "Q_" + std::to_string(q);
    }
    return "?";
}

Character::Character(LocalField f, Rational s_, long long n_) : field(f), s(s_), n(n_)
{
    if (field.kind == FieldKind::Real) {
        n = ((n % 2) + 2) % 2;
    } else if (field.kind == FieldKind::NonArch) {
        if (n != 0)
            raise(ErrorCode::UnsupportedField,
                  "only unramified characters nu^s are represented over nonarchimedean fields");
    }
}

Character Character::nu(const LocalField& f)
{
    switch (f.kind) {
    case FieldKind::Real: return Character(f, Rational(1), 0);
    case FieldKind::Complex: return Character(f, Rational(2), 0);
    case FieldKind::NonArch: return Character(f, Rational(1), 0);
    }
    raise(ErrorCode::UnsupportedField, "bad field kind");
}

Character Character::nm(const LocalField& f)
{
    switch (f.kind) {
    case FieldKind::Real: return Character(f, Rational(1), 1);
    case FieldKind::Complex: return Character(f, Rational(2), 0);
    case FieldKind::NonArch:
        raise(ErrorCode::UnsupportedField, "Nm over R is not defined for nonarchimedean fields");
    }
    raise(ErrorCode::UnsupportedField, "bad field kind");
}

std::string Character::to_string() const
{
    return "lambda_{" + s.to_string() + "," + std::to_string(n) + "}@" + field.to_string();
}

Character mul(const Character& a, const Character& b)
{
    if (a.field != b.field) raise(ErrorCode::FieldMismatch, "characters live on different fields");
    return Character(a.field, a.s + b.s, a.n + b.n);
}

Character inv(const Character& a)
{
    return Character(a.field, -a.s, -a.n);
}

Character pow(const Character& a, long long k)
{
    return Character(a.field, a.s * Rational(k), a.n * k);
}

Character nm_power(const LocalField& f, const Rational& r)
{
    switch (f.kind) {
    case FieldKind::Real: {
        if (r.den() % 2 == 0)
            raise(ErrorCode::EvenRootOverReal, "Nm^{j/N} over R needs odd N, got " + r.to_string());
        long long parity = (long long)(((r.num() % 2) + 2) % 2);
        return Character(f, r, parity);
    }
    case FieldKind::Complex:
        return Character(f, r * Rational(2), 0);
    case FieldKind::NonArch:
        return Character(f, r, 0);
    }
    raise(ErrorCode::UnsupportedField, "bad field kind");
}

Character nu_power(const LocalField& f, const Rational& r)
{
    return Character(f, Character::nu(f).s * r, 0);
}

Rational real_part(const Character& a)
{
    if (a.field.kind == FieldKind::Complex) return a.s / Rational(2);
    return a.s;
}

bool is_singular(const Character& a)
{
    switch (a.field.kind) {
    case FieldKind::Real: {
        // nu^{-1} x^{-m}, m >= 0: s = -1-m, twist = m mod 2.
        if (!a.s.is_integer()) return false;
        long long s = a.s.num_ll();
        if (s + 1 > 0) return false;
        long long m = -1 - s;
        return ((m % 2) + 2) % 2 == a.n;
    }
    case FieldKind::Complex: {
        // nu^{-1} x^{-m} xbar^{-m'}: (s+n)/2 and (s-n)/2 integers <= -1.
        Rational p = (a.s + Rational(a.n)) / Rational(2);
        Rational q = (a.s - Rational(a.n)) / Rational(2);
        return p.is_integer() && q.is_integer() && p.num_ll() <= -1 && q.num_ll() <= -1;
    }
    case FieldKind::NonArch:
        raise(ErrorCode::UnsupportedField,
              "singularity predicate over nonarchimedean fields reduces to s = -1");
    }
    return false;
}

bool is_strongly_regular(const Character& a)
{
    if (!a.field.archimedean())
        raise(ErrorCode::UnsupportedField, "strong regularity is an archimedean notion");
    if (is_singular(a)) raise(ErrorCode::SingularInput, "strong regularity needs a nonsingular character");
    switch (a.field.kind) {
    case FieldKind::Real: {
        if (!a.s.is_integer()) return true;
        long long s = a.s.num_ll();
        // x^m/|x| = lambda_{m-1, m mod 2}: s = m-1 with twist == (s+1) mod 2.
        if ((((s + 1) % 2) + 2) % 2 == a.n) return false;
        // x^m, m < 0: lambda_{m, m mod 2} with s = m < 0.
        if (s < 0 && ((s % 2) + 2) % 2 == a.n) return false;
        return true;
    }
    case FieldKind::Complex: {
        Rational p = (a.s + Rational(a.n)) / Rational(2);
        Rational q = (a.s - Rational(a.n)) / Rational(2);
        if (!p.is_integer() || !q.is_integer()) return true;
        return !(p.num_ll() < 0 || q.num_ll() < 0);
    }
    default:
        return true;
    }
}

std::complex<double> evaluate(const Character& a, double x)
{
    if (a.field.kind != FieldKind::Real)
        raise(ErrorCode::FieldMismatch, "real argument for non-real character");
    if (x == 0.0) raise(ErrorCode::ZeroArgument, "characters are defined on F^*");
    double mag = std::pow(std::abs(x), a.s.to_double());
    double sgn = (x < 0 && a.n == 1) ? -1.0 : 1.0;
    return {mag * sgn, 0.0};
}

std::complex<double> evaluate(const Character& a, std::complex<double> x)
{
    if (a.field.kind == FieldKind::Real) {
        if (x.imag() != 0.0) raise(ErrorCode::FieldMismatch, "complex argument for real character");
        return evaluate(a, x.real());
    }
    if (a.field.kind != FieldKind::Complex)
        raise(ErrorCode::FieldMismatch, "complex argument for nonarchimedean character");
    double r = std::abs(x);
    if (r == 0.0) raise(ErrorCode::ZeroArgument, "characters are defined on F^*");
    std::complex<double> phase = x / r;
    std::complex<double> tw = 1.0;
    long long k = a.n >= 0 ? a.n : -a.n;
    std::complex<double> base = a.n >= 0 ? phase : 1.0 / phase;
    for (long long i = 0; i < k; ++i) tw *= base;
    return std::pow(r, a.s.to_double()) * tw;
}

std::complex<double> evaluate_nonarch(const Character& a, long long valuation)
{
    if (a.field.kind != FieldKind::NonArch)
        raise(ErrorCode::FieldMismatch, "valuation argument for archimedean character");
    // nu(x) = q^{-v(x)}, so nu^s(x) = q^{-v s}.
    return std::pow(double(a.field.q), -double(valuation) * a.s.to_double());
}

std::string field_json_tag(const LocalField& f)
{
    switch (f.kind) {
    case FieldKind::Real: return "R";
    case FieldKind::Complex: return "C";
    default: return "NonArch";
    }
}

} // namespace gf
