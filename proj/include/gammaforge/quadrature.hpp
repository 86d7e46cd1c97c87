#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "gammaforge/errors.hpp"

namespace gf {

struct QuadResult {
    std::complex<double> value{0.0, 0.0};
    double error = 0.0;
    size_t evals = 0;
};

struct QuadOptions {
    double abs_tol = 1e-10;
    size_t max_evals = 20'000'000;
    bool throw_on_budget = true;
};

/// Adaptive Gauss-Kronrod 7/15 over a pre-segmented interval; segments are
/// split at the worst error estimate until the tolerance or budget is hit.
QuadResult integrate_segments(const std::function<std::complex<double>(double)>& f,
                              std::vector<double> breakpoints, const QuadOptions& opt);

/// Breakpoints for [a,b] such that each panel spans at most about a quarter
/// period of the supplied phase-derivative bound |theta'(x)| and at most
/// max_width; used to seed oscillatory integrals.
std::vector<double> oscillation_breakpoints(double a, double b,
                                            const std::function<double(double)>& phase_derivative,
                                            double max_width);

} // namespace gf
