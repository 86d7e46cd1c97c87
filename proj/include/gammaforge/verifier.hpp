#pragma once

#include <optional>

#include "gammaforge/identity.hpp"
#include "gammaforge/quadrature.hpp"
#include "gammaforge/testfn.hpp"

namespace gf {

/// One side of a monomial identity as a concrete integrand
/// psi(a prod x_i^{n_i}) prod lambda_i(x_i) over R^k or C^k.
struct ElementaryFunction {
    LocalField field;
    double a = 1.0;
    std::vector<long long> exponents;
    std::vector<Character> chars;
};

ElementaryFunction source_side(const MonomialIdentity& id);
ElementaryFunction target_side(const MonomialIdentity& id);

struct PairingOptions {
    double tol = 1e-6;
    size_t max_evals = 60'000'000;
    double axis_cutoff = 0.0; // 0: automatic from vanishing orders
    double box_radius = 10.0;
};

/// Adaptive pairing <G, phi> with the self-dual measure; oscillation-aware
/// panels, axis truncation driven by the test function's vanishing factors.
QuadResult pair_integral(const ElementaryFunction& G, const TestFunction& phi,
                         const PairingOptions& opt);

struct PairingRecord {
    std::string test_desc;
    cdouble left{0.0, 0.0}, right{0.0, 0.0}, ratio{0.0, 0.0};
    double err_left = 0.0, err_right = 0.0;
};

struct VerificationReport {
    MonomialIdentity identity;
    unsigned long long seed = 0;
    double tol = 0.0;
    std::vector<PairingRecord> tests;
    cdouble fitted_C{0.0, 0.0};
    double max_rel_dev = 0.0;
    double max_quad_err = 0.0;
    bool pass = false;
};

struct VerifierOptions {
    PairingOptions pairing;
    int test_order = 2; // N of the S_N membership
    int threads = 1;
};

/// Weak-sense verification: pairs hat G1 (via <G1, FT phi>) against
/// C <G2, phi> for num_tests seeded test functions.  When id.C is unset the
/// constant is fitted on the first test and validated on the rest.
VerificationReport verify_identity(const MonomialIdentity& id, int num_tests, double tol,
                                   unsigned long long seed, const VerifierOptions& opt = {});

nlohmann::json report_to_json(const VerificationReport& rep);

/// Closed-form Gaussian-Fresnel moment (2pi)^{-1/2} int x^m e^{iax^2}
/// e^{-x^2/2} dx; the independent oracle for the quadratic-phase cases.
cdouble fresnel_gauss_moment(double a, int m);

/// Oracle pairing <psi(a x^2) poly Gauss> computed termwise from the moments.
cdouble fresnel_pair_oracle(double a, const CPoly& poly);

int verifier_threads(); // GAMMAFORGE_THREADS, clamped to [1, 64]

} // namespace gf
