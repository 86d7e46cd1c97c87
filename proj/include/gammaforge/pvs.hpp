#pragma once

#include <string>
#include <utility>

#include "gammaforge/identity.hpp"
#include "gammaforge/polynomial.hpp"

namespace gf {

/// Quotient of polynomials, reduced by content, denominator nonzero.
struct RationalFunc {
    Polynomial num;
    Polynomial den;

    RationalFunc() : num(0), den(0) {}
    RationalFunc(Polynomial n) : num(std::move(n)), den(Polynomial::constant(num.nvars(), Rational(1)))
    {
        reduce();
    }
    RationalFunc(Polynomial n, Polynomial d) : num(std::move(n)), den(std::move(d)) { reduce(); }

    int nvars() const { return num.nvars(); }
    bool is_polynomial() const;
    void reduce();

    RationalFunc operator-() const { return {-num, den}; }
    friend RationalFunc operator+(const RationalFunc& a, const RationalFunc& b);
    friend RationalFunc operator-(const RationalFunc& a, const RationalFunc& b);
    friend RationalFunc operator*(const RationalFunc& a, const RationalFunc& b);
    RationalFunc pow(int k) const; // negative k swaps num/den

    RationalFunc derivative(int var) const;

    /// Exact evaluation; throws SingularHessian if the denominator vanishes.
    Rational eval(const std::vector<Rational>& x) const;
    std::complex<double> eval(const std::vector<std::complex<double>>& x) const;

    bool homogeneous_of_degree(int& deg) const;
};

/// A prehomogeneous vector space descriptor: dimension M, invariant degree
/// D, relative invariant f and its multiplicative Legendre transform f_star
/// (plain-coordinate dual), b-function roots s_j with b(s) = prod (s+s_j),
/// and the discovered mlt scale.
struct PVSDescriptor {
    std::string name;
    long long M = 0;
    long long D = 0;
    RationalFunc f;
    RationalFunc f_star;
    std::vector<Rational> b_roots;
    Rational scale{1};
};

/// Built-in spaces: power(n), monomial(k), sym_det(3), det(n), n <= 4,
/// pfaffian(6), e6_cubic, quad_times_linear(N).  UnknownName otherwise.
PVSDescriptor builtin_pvs(const std::string& name);

struct MltCheck {
    bool ok = false;
    Rational scale{0};
};

/// Verifies f_star(f'(x)/f(x)) * f(x) = const: exact rational-identity route
/// for polynomial pairs with degree <= 3 and <= 10 variables, otherwise 20
/// random rational points with exact arithmetic.  Returns the constant.
MltCheck mlt_verify(const RationalFunc& f, const RationalFunc& f_star, unsigned long long seed = 1);

/// (prod x_i^{n_i})_* = prod n_i^{-n_i} prod x_i^{n_i}: closed-form scale
/// and exponents.
std::pair<Rational, std::vector<long long>> mlt_monomial(const std::vector<long long>& exponents);

/// Doubling construction: F(x,y) = f'(x).y + f(x) on V^2 and its transform
/// F_*(x_*,y_*) = (d-1)^{1-d} (f_*'(y_*).x_* - f_*(x_*))^{d-1} f_*(y_*)^{2-d},
/// with 0^0 = 1 for d = 1.
std::pair<RationalFunc, RationalFunc> mlt_pair(const Polynomial& f, const RationalFunc& f_star,
                                               int d);

/// (f_*'/f_*) o (f'/f) = id at `npoints` random rational points, exact.
bool mlt_compose_identity(const RationalFunc& f, const RationalFunc& f_star, int npoints = 20,
                          unsigned long long seed = 7);

/// Checks the root multiset {s_j} is symmetric about (1 + M/D)/2.
bool b_roots_symmetric(const PVSDescriptor& V);

/// Gamma function of the space (C_V = 1 normalization):
///   Gamma^V(lambda_{s,n}) = prod_j Gamma^C_n(s + 2 (s_j - M/D)).
/// Requires F = C data: M/D integral, roots integer or half-integer and
/// symmetric (AssumptionViolated otherwise).
cdouble gamma_pvs(const PVSDescriptor& V, cdouble s, long long n);

/// One arrangement identity |f|^p |y|^q of the degree-3 family.
struct PvsIdentity {
    std::vector<Rational> sigma; // root arrangement
    Rational q, p;               // source parameters
    Rational q_dual, p_dual;     // transform side
    MonomialIdentity identity;   // slots (t, W), exponents (-1, 1), degrees (1, D)
};

/// All identities of the t-augmented space (one per distinct arrangement of
/// the b-root multiset); D = 3 required.
std::vector<PvsIdentity> pvs_identities(const PVSDescriptor& V);

/// Replaces the prehomogeneous slot by D scalar slots with the
/// root-shifted characters, yielding an ordinary monomial identity whose
/// divisor relation can be checked exactly.
MonomialIdentity expand_pvs_identity(const PvsIdentity& id, const PVSDescriptor& V);

/// Constant-coefficient differential operator op(d/dx) applied to target.
Polynomial apply_operator(const Polynomial& op, const Polynomial& target);

/// Pfaffian of the generic 2n x 2n antisymmetric matrix in its n(2n-1)
/// upper-triangle variables (row-major order).
Polynomial pfaffian_polynomial(int two_n);

/// Deterministic small random rational test points avoiding given
/// denominators' zero sets.
std::vector<Rational> random_rational_point(int nvars, unsigned long long& state);

} // namespace gf
