#include "gammaforge/gamma.hpp"

#include <cmath>

namespace gf {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

// Lanczos coefficients, g = 7, 9 terms.
constexpr double kLanczos[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

cdouble lanczos_core(cdouble z)
{
    // valid for Re z >= 0.5
    z -= 1.0;
    cdouble x = kLanczos[0];
    for (int i = 1; i < 9; ++i) x += kLanczos[i] / (z + double(i));
    cdouble t = z + 7.5;
    return std::sqrt(2.0 * kPi) * std::pow(t, z + 0.5) * std::exp(-t) * x;
}

cdouble ipow(long long n)
{
    switch (((n % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
    }
}

} // namespace

cdouble euler_gamma(cdouble z)
{
    if (z.real() < 0.5) {
        // reflection: Gamma(z) = pi / (sin(pi z) Gamma(1-z))
        return kPi / (std::sin(kPi * z) * lanczos_core(1.0 - z));
    }
    return lanczos_core(z);
}

cdouble GammaValue::checked() const
{
    if (at_pole) raise(ErrorCode::PoleError, "Gamma^F evaluated at a pole character");
    return value;
}

double gamma_pole_distance(const LocalField& field, cdouble s, long long n)
{
    switch (field.kind) {
    case FieldKind::Real: {
        // poles at (s,n) = (-m, m mod 2), m >= 0
        double best = 1e300;
        long long m0 = (long long)std::max(0.0, std::round(-s.real()));
        for (long long m = std::max(0LL, m0 - 2); m <= m0 + 2; ++m) {
            if (((m % 2) + 2) % 2 != ((n % 2) + 2) % 2) continue;
            best = std::min(best, std::abs(s - cdouble(double(-m), 0.0)));
        }
        return best;
    }
    case FieldKind::Complex: {
        // poles at s = -A integer, A >= |n|, A == n (mod 2)
        double best = 1e300;
        long long A0 = (long long)std::round(-s.real());
        for (long long A = A0 - 2; A <= A0 + 2; ++A) {
            if (A < std::llabs(n)) continue;
            if (((A - n) % 2) != 0) continue;
            best = std::min(best, std::abs(s - cdouble(double(-A), 0.0)));
        }
        return best;
    }
    case FieldKind::NonArch: {
        // poles where q^{-s} = 1, i.e. s in (2 pi i / ln q) Z
        double lnq = std::log(double(field.q));
        double period = 2.0 * kPi / lnq;
        double k = std::round(s.imag() / period);
        cdouble nearest(0.0, k * period);
        return std::abs(s - nearest);
    }
    }
    return 1e300;
}

GammaValue gamma_f(const LocalField& field, cdouble s, long long n)
{
    GammaValue out;
    out.at_pole = gamma_pole_distance(field, s, n) < 1e-9;
    switch (field.kind) {
    case FieldKind::Real: {
        n = ((n % 2) + 2) % 2;
        if (s.real() >= 0.5) {
            out.value = std::pow(2.0 * kPi, -0.5) * 2.0 * ipow(n) * euler_gamma(s) *
                        std::cos(kPi * (s - double(n)) / 2.0);
        } else {
            // reflected form, free of 0 * inf at twist-mismatched integers:
            // Gamma^R_0(s) = sqrt(pi/2) / (sin(pi s/2) Gamma(1-s))
            // Gamma^R_1(s) = i sqrt(pi/2) / (cos(pi s/2) Gamma(1-s))
            cdouble trig = (n == 0) ? std::sin(kPi * s / 2.0) : std::cos(kPi * s / 2.0);
            out.value = ipow(n) * std::sqrt(kPi / 2.0) / (trig * euler_gamma(1.0 - s));
        }
        return out;
    }
    case FieldKind::Complex: {
        // ratio form of (2pi)^{-1} 2^s i^n Gamma((s+n)/2) Gamma((s-n)/2) sin(pi(s-n)/2):
        //   Gamma^C_n(s) = 2^{s-1} i^n Gamma((s+n)/2) / Gamma((2+n-s)/2)
        out.value = std::pow(cdouble(2.0, 0.0), s - 1.0) * ipow(n) *
                    euler_gamma((s + double(n)) / 2.0) / euler_gamma((2.0 + double(n) - s) / 2.0);
        return out;
    }
    case FieldKind::NonArch: {
        if (n != 0) raise(ErrorCode::UnsupportedField, "nonarchimedean Gamma needs twist 0");
        double q = double(field.q);
        cdouble z = std::pow(q, -s); // nu^s(pi)
        out.value = (1.0 - 1.0 / (z * q)) / (1.0 - z);
        return out;
    }
    }
    raise(ErrorCode::UnsupportedField, "bad field kind");
}

cdouble gamma_nonarch_unramified(long long q, cdouble z)
{
    return (1.0 - 1.0 / (z * double(q))) / (1.0 - z);
}

cdouble gamma_generalized(const LocalField& field, long long d, cdouble a, cdouble s, long long n)
{
    if (d <= 0) raise(ErrorCode::UnsupportedCase, "d must be positive");
    if (field.kind == FieldKind::NonArch)
        raise(ErrorCode::UnsupportedCase, "use gamma_generalized_nonarch for nonarchimedean fields");
    if (d == 1) {
        if (field.kind == FieldKind::Real && a.imag() != 0.0)
            raise(ErrorCode::UnsupportedCase, "real field needs real a");
        cdouble la = std::pow(std::abs(a), -s);
        cdouble ph = (field.kind == FieldKind::Real)
                         ? cdouble(a.real() < 0.0 && (n % 2 != 0) ? -1.0 : 1.0, 0.0)
                         : std::pow(a / std::abs(a), cdouble(double(-n), 0.0));
        return gamma_f(field, s, n).value * la * ph;
    }
    if (field.kind == FieldKind::Complex) {
        // unique d-th root lambda_{s/d, n/d} when d | n; empty sum otherwise
        if (n % d != 0) return {0.0, 0.0};
        cdouble sr = s / double(d);
        long long nr = n / d;
        cdouble mu_inv_a = std::pow(std::abs(a), -sr) * std::pow(a / std::abs(a), cdouble(double(-nr), 0.0));
        return gamma_f(field, sr, nr).value * mu_inv_a / double(d);
    }
    // F = R
    if (d % 2 == 1) {
        cdouble sr = s / double(d);
        long long nr = ((n % 2) + 2) % 2; // d odd: root twist = n mod 2
        cdouble mu_inv_a = std::pow(std::abs(a.real()), -sr) *
                           (a.real() < 0.0 && nr == 1 ? -1.0 : 1.0);
        if (a.imag() != 0.0) raise(ErrorCode::UnsupportedCase, "real field needs real a");
        return gamma_f(field, sr, nr).value * mu_inv_a / double(d);
    }
    // d even over R: two roots (twists 0 and 1); only n = 0 and real a supported
    if (n % 2 != 0 || a.imag() != 0.0)
        raise(ErrorCode::UnsupportedCase, "even d over R supports only twist 0 and real a");
    if (n != 0)
        raise(ErrorCode::UnsupportedCase, "even d over R: no closed form for nonzero twist");
    cdouble sr = s / double(d);
    double av = a.real();
    cdouble t0 = gamma_f(field, sr, 0).value * std::pow(std::abs(av), -sr);
    cdouble t1 = gamma_f(field, sr, 1).value * std::pow(std::abs(av), -sr) * (av < 0 ? -1.0 : 1.0);
    return (t0 + t1) / double(d);
}

cdouble gamma_generalized_nonarch(const LocalField& field, long long d, long long a_valuation,
                                  cdouble s)
{
    if (field.kind != FieldKind::NonArch)
        raise(ErrorCode::UnsupportedCase, "nonarchimedean field expected");
    double q = double(field.q);
    cdouble acc = 0.0;
    for (long long j = 0; j < d; ++j) {
        // root mu_j with mu_j(pi) = q^{-s/d} * e^{2 pi i j / d}
        cdouble zj = std::pow(q, -s / double(d)) *
                     std::exp(cdouble(0.0, 2.0 * kPi * double(j) / double(d)));
        cdouble mu_inv_a = std::pow(zj, cdouble(double(-a_valuation), 0.0));
        acc += gamma_nonarch_unramified(field.q, zj) * mu_inv_a;
    }
    return acc / double(d);
}

cdouble multiplication_constant(const LocalField& field, long long N)
{
    if (field.kind == FieldKind::Complex) return cdouble(1.0 / double(N), 0.0);
    if (field.kind == FieldKind::Real) {
        if (N % 2 == 0) raise(ErrorCode::EvenRootOverReal, "multiplication formula over R needs odd N");
        long long e = -((N - 2) * (N - 1) / 2);
        return ipow(e) / std::sqrt(double(N));
    }
    raise(ErrorCode::UnsupportedCase, "multiplication constant is archimedean");
}

} // namespace gf
