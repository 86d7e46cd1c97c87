#pragma once

#include <complex>
#include <string>

#include "gammaforge/polynomial.hpp"

namespace gf {

/// Polynomial with Gaussian-rational coefficients, stored as real and
/// imaginary rational parts.
struct CPoly {
    Polynomial re, im;

    explicit CPoly(int nvars = 0) : re(nvars), im(nvars) {}
    CPoly(Polynomial r, Polynomial i) : re(std::move(r)), im(std::move(i)) {}
    static CPoly from_real(Polynomial r)
    {
        Polynomial z(r.nvars());
        return {std::move(r), std::move(z)};
    }

    int nvars() const { return re.nvars(); }
    bool is_zero() const { return re.is_zero() && im.is_zero(); }

    friend CPoly operator+(const CPoly& a, const CPoly& b) { return {a.re + b.re, a.im + b.im}; }
    friend CPoly operator-(const CPoly& a, const CPoly& b) { return {a.re - b.re, a.im - b.im}; }
    friend CPoly operator*(const CPoly& a, const CPoly& b)
    {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    CPoly times_i() const { return {-im, re}; }
    CPoly scale(const Rational& c) const { return {c * re, c * im}; }
    CPoly derivative(int var) const { return {re.derivative(var), im.derivative(var)}; }
    std::complex<double> eval(const std::vector<double>& x) const
    {
        return {re.eval(x), im.eval(x)};
    }
    int order_in(int var) const;
};

/// Schwartz test function of Hermite-Gaussian type: poly(x) exp(-|x|^2/2),
/// with an exact closed-form Fourier transform of the same shape.
///
/// kernel_sign[i] records the sign of variable i inside the transform
/// kernel exp(i sum sign_i x_i y_i): +1 for real coordinates and the real
/// part of complex ones, -1 for the imaginary part of complex coordinates.
struct TestFunction {
    CPoly poly;
    std::vector<int> kernel_sign;
    int vanishing_order = 0; // recorded N of the membership statement
    std::string desc;

    int nvars() const { return poly.nvars(); }
    std::complex<double> eval(const std::vector<double>& x) const;
};

/// Builds |R|^{2N}(d) applied to |P|^{2N'} h Gauss with N' = N + 2 and h a
/// small seeded Hermite polynomial.  P and R are monomials given by their
/// exponent vectors (NonMonomialFactor if a negative exponent is passed).
TestFunction make_test_function(const std::vector<int>& P_exps, const std::vector<int>& R_exps,
                                int N, unsigned long long seed,
                                const std::vector<int>& kernel_sign);

/// Exact Fourier transform under f^(y) = (2pi)^{-k/2} int f(x)
/// exp(i sum sign_i x_i y_i) dx: maps poly * Gauss to poly * Gauss through
/// the Hermite calculus x^m -> i^m He_m(y) (sign-adjusted).
TestFunction fourier_transform(const TestFunction& f);

/// Probabilists' Hermite polynomial He_n in the given variable.
Polynomial hermite_poly(int nvars, int var, int n);

/// Vanishing order of f on {x_var = 0}.
int vanishing_order(const TestFunction& f, int var);

} // namespace gf
