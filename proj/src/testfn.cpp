#include "gammaforge/testfn.hpp"

#include <cmath>

namespace gf {

int CPoly::order_in(int var) const
{
    if (is_zero()) return 0;
    if (re.is_zero()) return im.order_in(var);
    if (im.is_zero()) return re.order_in(var);
    return std::min(re.order_in(var), im.order_in(var));
}

std::complex<double> TestFunction::eval(const std::vector<double>& x) const
{
    double q = 0.0;
    for (double v : x) q += v * v;
    return poly.eval(x) * std::exp(-0.5 * q);
}

Polynomial hermite_poly(int nvars, int var, int n)
{
    Polynomial h0 = Polynomial::constant(nvars, Rational(1));
    if (n == 0) return h0;
    Polynomial x = Polynomial::variable(nvars, var);
    Polynomial h1 = x;
    for (int k = 1; k < n; ++k) {
        Polynomial h2 = x * h1 - Rational(k) * h0;
        h0 = h1;
        h1 = h2;
    }
    return h1;
}

namespace {

/// d/dx_i of p * exp(-|x|^2/2), returned as the polynomial factor.
CPoly gaussian_derivative(const CPoly& p, int var)
{
    int nv = p.nvars();
    Polynomial x = Polynomial::variable(nv, var);
    return {p.re.derivative(var) - x * p.re, p.im.derivative(var) - x * p.im};
}

} // namespace

TestFunction make_test_function(const std::vector<int>& P_exps, const std::vector<int>& R_exps,
                                int N, unsigned long long seed,
                                const std::vector<int>& kernel_sign)
{
    int nv = int(kernel_sign.size());
    if (int(P_exps.size()) != nv || int(R_exps.size()) != nv)
        raise(ErrorCode::NonMonomialFactor, "exponent vectors must match the variable count");
    for (int e : P_exps)
        if (e < 0) raise(ErrorCode::NonMonomialFactor, "P must be a monomial");
    for (int e : R_exps)
        if (e < 0) raise(ErrorCode::NonMonomialFactor, "R must be a monomial");

    int Nprime = N + 2;
    // seeded low-degree Hermite bump h (kept positive-definite-free; any
    // nonzero h is admissible)
    unsigned long long state = seed * 0x9e3779b97f4a7c15ull + 0x853c49e6748fea9bull;
    auto next = [&state]() {
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        return (state >> 33);
    };
    // The pairings against parity-definite integrands only see the even part
    // of h, so the seeded variety must live in even terms.
    Polynomial h = Polynomial::constant(nv, Rational(1 + (long long)(next() % 5)));
    for (int i = 0; i < nv; ++i) {
        h += Rational(1 + (long long)(next() % 7)) * Polynomial::variable(nv, i, 2);
        long long c = (long long)(next() % 5) - 2;
        if (c != 0) h += Rational(c) * Polynomial::variable(nv, i);
    }
    if (nv >= 2) {
        Polynomial cross = Polynomial::variable(nv, 0, 2) * Polynomial::variable(nv, 1, 2);
        h += Rational((long long)(next() % 9)) * cross;
    }

    Polynomial core = h;
    for (int i = 0; i < nv; ++i)
        if (P_exps[i]) core *= Polynomial::variable(nv, i).pow(2 * Nprime * P_exps[i]);

    CPoly p = CPoly::from_real(core);
    for (int i = 0; i < nv; ++i)
        for (int k = 0; k < 2 * N * R_exps[i]; ++k) p = gaussian_derivative(p, i);

    TestFunction f;
    f.poly = p;
    f.kernel_sign = kernel_sign;
    f.vanishing_order = N;
    f.desc = "S_N(P,R) N=" + std::to_string(N) + " seed=" + std::to_string(seed);
    return f;
}

TestFunction fourier_transform(const TestFunction& f)
{
    int nv = f.nvars();
    // He polynomials per variable up to the needed degree
    std::vector<int> maxdeg(nv, 0);
    auto scan = [&](const Polynomial& p) {
        for (const auto& [e, c] : p.terms())
            for (int i = 0; i < nv; ++i) maxdeg[i] = std::max(maxdeg[i], e[i]);
    };
    scan(f.poly.re);
    scan(f.poly.im);
    std::vector<std::vector<Polynomial>> he(nv);
    for (int i = 0; i < nv; ++i)
        for (int d = 0; d <= maxdeg[i]; ++d) he[i].push_back(hermite_poly(nv, i, d));

    auto transform_part = [&](const Polynomial& p, int unit_quarter) {
        // unit_quarter: additional i-power applied to every term (0 for the
        // real part, 1 for i * imaginary part)
        CPoly acc(nv);
        for (const auto& [e, c] : p.terms()) {
            Polynomial prod = Polynomial::constant(nv, c);
            long long ipow = unit_quarter;
            for (int i = 0; i < nv; ++i) {
                if (!e[i]) continue;
                prod *= he[i][e[i]];
                // x^m -> i^m He_m(y) for kernel e^{+ixy}; for e^{-ixy} the
                // factor is (-i)^m = i^{3m}
                ipow += (f.kernel_sign[i] > 0) ? e[i] : 3LL * e[i];
            }
            switch (ipow % 4) {
            case 0: acc = acc + CPoly::from_real(prod); break;
            case 1: acc = acc + CPoly::from_real(prod).times_i(); break;
            case 2: acc = acc - CPoly::from_real(prod); break;
            default: acc = acc - CPoly::from_real(prod).times_i(); break;
            }
        }
        return acc;
    };

    TestFunction out;
    out.poly = transform_part(f.poly.re, 0) + transform_part(f.poly.im, 1);
    out.kernel_sign = f.kernel_sign;
    out.vanishing_order = f.vanishing_order;
    out.desc = "FT[" + f.desc + "]";
    return out;
}

int vanishing_order(const TestFunction& f, int var)
{
    return f.poly.order_in(var);
}

} // namespace gf
