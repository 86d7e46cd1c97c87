#pragma once

#include "gammaforge/polynomial.hpp"

namespace gf {

/// Truncated multivariate power series with exact rational coefficients:
/// a polynomial in the offsets (x - base), kept to total order K.
struct PowerSeries {
    std::vector<Rational> base; // expansion point
    Polynomial poly;            // in offset variables
    int order = 0;              // truncation order (inclusive)

    int nvars() const { return int(base.size()); }

    Rational coeff(const Polynomial::Exps& e) const
    {
        auto it = poly.terms().find(e);
        return it == poly.terms().end() ? Rational(0) : it->second;
    }

    /// Constant and linear data.
    Rational value_at_base() const { return coeff(Polynomial::Exps(nvars(), 0)); }
    std::vector<Rational> gradient_at_base() const;
};

/// Expands a polynomial (or a quotient p/q with q(base) != 0) around a base
/// point to the given order.
PowerSeries expand_at(const Polynomial& p, const std::vector<Rational>& base, int order);
PowerSeries expand_quotient_at(const Polynomial& num, const Polynomial& den,
                               const std::vector<Rational>& base, int order);

/// Formal Legendre transform: L(Q)(p) = p v_p - Q(v_p) with v_p the unique
/// critical point of p v - Q(v) near the base; requires det Q''(base) != 0
/// (SingularHessian otherwise).  The result is a series at p0 = Q'(base),
/// computed by Newton iteration to the same truncation order.
PowerSeries legendre_series(const PowerSeries& Q, int order);

} // namespace gf
