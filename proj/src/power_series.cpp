#include "gammaforge/power_series.hpp"

namespace gf {

std::vector<Rational> PowerSeries::gradient_at_base() const
{
    std::vector<Rational> g;
    for (int i = 0; i < nvars(); ++i) {
        Polynomial::Exps e(nvars(), 0);
        e[i] = 1;
        g.push_back(coeff(e));
    }
    return g;
}

PowerSeries expand_at(const Polynomial& p, const std::vector<Rational>& base, int order)
{
    int n = p.nvars();
    // substitute x_i := base_i + d_i and truncate
    std::vector<Polynomial> shift;
    for (int i = 0; i < n; ++i)
        shift.push_back(Polynomial::constant(n, base[i]) + Polynomial::variable(n, i));
    PowerSeries s;
    s.base = base;
    s.order = order;
    s.poly = p.compose(shift).truncate(order);
    return s;
}

PowerSeries expand_quotient_at(const Polynomial& num, const Polynomial& den,
                               const std::vector<Rational>& base, int order)
{
    Rational d0 = den.eval(base);
    if (d0.is_zero()) raise(ErrorCode::SingularHessian, "denominator vanishes at the base point");
    PowerSeries n_s = expand_at(num, base, order);
    PowerSeries d_s = expand_at(den, base, order);
    // 1/den = (1/d0) * 1/(1 + u), u = den/d0 - 1, |u| small formally
    int n = num.nvars();
    Polynomial u = (Rational(1) / d0) * d_s.poly - Polynomial::constant(n, Rational(1));
    Polynomial inv = Polynomial::constant(n, Rational(1));
    Polynomial upow = Polynomial::constant(n, Rational(1));
    for (int k = 1; k <= order; ++k) {
        upow = (upow * u).truncate(order);
        inv += (k % 2 ? -Rational(1) : Rational(1)) * upow;
    }
    PowerSeries out;
    out.base = base;
    out.order = order;
    out.poly = ((Rational(1) / d0) * (n_s.poly * inv)).truncate(order);
    return out;
}

PowerSeries legendre_series(const PowerSeries& Q, int order)
{
    int n = Q.nvars();
    // Hessian at the base
    std::vector<std::vector<Rational>> hess(n, std::vector<Rational>(n, Rational(0)));
    for (int i = 0; i < n; ++i) {
        Polynomial di = Q.poly.derivative(i);
        for (int j = 0; j < n; ++j) {
            Polynomial::Exps e(n, 0);
            e[j] = 1;
            auto it = di.terms().find(e);
            hess[i][j] = it == di.terms().end() ? Rational(0) : it->second;
        }
    }
    Rational det = rational_det(hess);
    if (det.is_zero()) raise(ErrorCode::SingularHessian, "Legendre transform needs det Q'' != 0");

    // invert the Hessian (augmented elimination)
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n, Rational(0)));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) a[i][j] = hess[i][j];
        a[i][n + i] = Rational(1);
    }
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int row = col; row < n; ++row)
            if (!a[row][col].is_zero()) {
                pivot = row;
                break;
            }
        std::swap(a[pivot], a[col]);
        Rational inv = Rational(1) / a[col][col];
        for (int j = 0; j < 2 * n; ++j) a[col][j] *= inv;
        for (int row = 0; row < n; ++row) {
            if (row == col || a[row][col].is_zero()) continue;
            Rational f = a[row][col];
            for (int j = 0; j < 2 * n; ++j) a[row][j] -= f * a[col][j];
        }
    }
    std::vector<std::vector<Rational>> hinv(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) hinv[i][j] = a[i][n + j];

    std::vector<Rational> p0 = Q.gradient_at_base();

    // Solve Q'(v) = p0 + rho for v(rho) by Newton iteration on series in rho.
    // v is represented as n series (polynomials in rho-offsets), v_i(0) = base_i offset 0.
    std::vector<Polynomial> grad;
    for (int i = 0; i < n; ++i) grad.push_back(Q.poly.derivative(i));

    std::vector<Polynomial> v(n, Polynomial(n)); // offsets dv = v - base, series in rho
    // initial guess: dv = H^{-1} rho
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) v[i] += hinv[i][j] * Polynomial::variable(n, j);

    for (int it = 0; it < order + 2; ++it) {
        // residual r = Q'(base + dv) - p0 - rho, as series in rho
        std::vector<Polynomial> r(n, Polynomial(n));
        bool all_zero = true;
        for (int i = 0; i < n; ++i) {
            r[i] = grad[i].compose(v).truncate(order);
            r[i] -= Polynomial::constant(n, p0[i]);
            r[i] -= Polynomial::variable(n, i);
            if (!r[i].is_zero()) all_zero = false;
        }
        if (all_zero) break;
        for (int i = 0; i < n; ++i) {
            Polynomial delta(n);
            for (int j = 0; j < n; ++j) delta += hinv[i][j] * r[j];
            v[i] = (v[i] - delta).truncate(order);
        }
    }

    // L(Q)(p0 + rho) = (p0 + rho) . (base + dv) - Q(base + dv)
    Polynomial L(n);
    for (int i = 0; i < n; ++i) {
        Polynomial pi = Polynomial::constant(n, p0[i]) + Polynomial::variable(n, i);
        Polynomial vi = Polynomial::constant(n, Q.base[i]) + v[i];
        L += pi * vi;
    }
    L -= Q.poly.compose(v).truncate(order);
    PowerSeries out;
    out.base = p0;
    out.order = order;
    out.poly = L.truncate(order);
    return out;
}

} // namespace gf
