#pragma once

#include <complex>

#include "gammaforge/character.hpp"

namespace gf {

using cdouble = std::complex<double>;

/// Euler Gamma on the complex plane (Lanczos g=7, 9 coefficients, with
/// reflection for Re z < 1/2; ~1e-13 relative accuracy away from poles).
cdouble euler_gamma(cdouble z);

/// Value of Gamma^F together with a pole flag.  at_pole is set when the
/// requested character is within 1e-9 (in (s,n) space) of a pole lambda nu_F
/// with lambda singular; the numeric value is unreliable there.
struct GammaValue {
    cdouble value{0.0, 0.0};
    bool at_pole = false;

    /// Finite value accessor; throws PoleError at poles.
    cdouble checked() const;
};

/// Gamma^F(lambda_{s,n}) for complex s.  Twist n is reduced mod 2 over R
/// and must be 0 over NonArch.
GammaValue gamma_f(const LocalField& field, cdouble s, long long n);

inline GammaValue gamma_f(const Character& chi)
{
    return gamma_f(chi.field, cdouble(chi.s.to_double(), 0.0), chi.n);
}

/// Gamma of an unramified nonarchimedean character with chi(pi) = z:
/// (1 - z^{-1} q^{-1}) / (1 - z).  Used for finite-order-twisted characters
/// in the cyclic-extension identities.
cdouble gamma_nonarch_unramified(long long q, cdouble z);

/// Distance (in (s,n) space) from lambda_{s,n} to the nearest pole of
/// Gamma^F, i.e. to the set {lambda nu_F : lambda singular}.
double gamma_pole_distance(const LocalField& field, cdouble s, long long n);

/// Generalized Gamma: Gamma_{d,a}(lambda) = d^{-1} sum over d-th roots mu of
/// lambda of Gamma(mu) mu^{-1}(a).  Archimedean version; `a` is a real
/// number over R and complex over C.  The twist of lambda must be divisible
/// by d over C (the function vanishes away from d-th powers; such calls
/// return 0).  Over R with d even, only real a and twist 0 are supported.
cdouble gamma_generalized(const LocalField& field, long long d, cdouble a, cdouble s, long long n);

/// Nonarchimedean generalized Gamma; `a` enters through its valuation only.
cdouble gamma_generalized_nonarch(const LocalField& field, long long d, long long a_valuation,
                                  cdouble s);

/// Multiplication-formula constant C_{F,N}: N^{-1} over C,
/// i^{-(N-2)(N-1)/2} N^{-1/2} over R (N odd).
cdouble multiplication_constant(const LocalField& field, long long N);

} // namespace gf
