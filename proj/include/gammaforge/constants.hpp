#pragma once

#include "gammaforge/identity.hpp"

namespace gf {

/// Evaluates the constant C of a (scalar-slot) identity from the Gamma
/// relation
///   Gamma_{d,a}(u^d) prod_i Gamma^F(u^{-n_i} lambda_i nu)
///     = C Gamma_{d,b}(u^{-d} gamma^d)        (SumTwo)
///   ... = C Gamma_{d,b}(u^d gamma^{-d})      (SumZero)
/// at five sample characters u = lambda_{sigma,0}, sigma in
/// {0.3, 0.7, 1.1, 1.9, 2.3}, resampling away from poles.  Throws
/// NotConstant if the sample ratios deviate pairwise by more than 1e-6
/// relative after resampling.
cdouble identity_constant(const MonomialIdentity& id);

/// Same, but returns all sample ratios (diagnostics / tests).
std::vector<cdouble> identity_constant_samples(const MonomialIdentity& id);

} // namespace gf
