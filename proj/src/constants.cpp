#include "gammaforge/constants.hpp"

#include <cmath>
#include <numeric>

namespace gf {

namespace {

struct NumChar {
    cdouble s;
    long long n;
};

NumChar to_num(const Character& c) { return {cdouble(c.s.to_double(), 0.0), c.n}; }

NumChar mul_num(const NumChar& a, const NumChar& b) { return {a.s + b.s, a.n + b.n}; }

NumChar pow_num(const NumChar& a, long long k) { return {a.s * double(k), a.n * k}; }

} // namespace

std::vector<cdouble> identity_constant_samples(const MonomialIdentity& id)
{
    const LocalField& F = id.field;
    if (!F.archimedean())
        raise(ErrorCode::UnsupportedCase, "identity constants are evaluated over R and C");

    std::vector<long long> absn(id.exponents.begin(), id.exponents.end());
    long long d = gcd_abs(absn);
    double a = id.a.to_double();
    double b = id.b.to_double();
    NumChar nu = to_num(Character::nu(F));
    NumChar gam = to_num(id.gamma);

    const double base_sigmas[5] = {0.3, 0.7, 1.1, 1.9, 2.3};
    std::vector<cdouble> ratios;
    for (double sigma0 : base_sigmas) {
        double sigma = sigma0;
        for (int attempt = 0; attempt < 40; ++attempt, sigma += 0.0371) {
            NumChar u{cdouble(sigma, 0.0), 0};
            bool pole = false;

            auto gamma_factor = [&](const NumChar& c) {
                GammaValue g = gamma_f(F, c.s, c.n);
                if (g.at_pole || !std::isfinite(std::abs(g.value)) || std::abs(g.value) < 1e-13)
                    pole = true;
                return g.value;
            };

            cdouble lhs = gamma_generalized(F, d, a, pow_num(u, d).s, pow_num(u, d).n);
            if (!std::isfinite(std::abs(lhs)) || std::abs(lhs) < 1e-13) pole = true;
            for (size_t i = 0; i < id.size() && !pole; ++i) {
                NumChar c = mul_num(mul_num(pow_num(u, -id.exponents[i]), to_num(id.lambda[i])), nu);
                lhs *= gamma_factor(c);
            }
            NumChar rhs_arg = id.case_ == IdentityCase::SumTwo
                                  ? mul_num(pow_num(u, -d), pow_num(gam, d))
                                  : mul_num(pow_num(u, d), pow_num(gam, -d));
            cdouble rhs = gamma_generalized(F, d, b, rhs_arg.s, rhs_arg.n);
            if (!std::isfinite(std::abs(rhs)) || std::abs(rhs) < 1e-13) pole = true;
            if (pole) continue;
            ratios.push_back(lhs / rhs);
            break;
        }
    }
    if (ratios.size() < 5)
        raise(ErrorCode::NotConstant, "could not find pole-free sample characters");
    return ratios;
}

cdouble identity_constant(const MonomialIdentity& id)
{
    std::vector<cdouble> ratios = identity_constant_samples(id);
    cdouble ref = ratios.front();
    for (const cdouble& r : ratios) {
        if (std::abs(r - ref) > 1e-6 * std::max(1.0, std::abs(ref)))
            raise(ErrorCode::NotConstant,
                  "sample ratios disagree; identity data is inconsistent or poles were hit");
    }
    cdouble mean = std::accumulate(ratios.begin(), ratios.end(), cdouble(0.0)) / double(ratios.size());
    return mean;
}

} // namespace gf
