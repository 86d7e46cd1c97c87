#pragma once

#include <vector>

#include "gammaforge/divisor.hpp"
#include "gammaforge/identity.hpp"

namespace gf {

/// Exact covering system of Z/nZ: an ordered list of cosets of subgroups,
/// pairwise disjoint with union the whole group.  Coset i is
/// {j : j == r_i mod n/p_i}, of size p_i.
struct CoveringSystem {
    long long n = 1;
    std::vector<std::pair<long long, long long>> cosets; // (size p_i, residue r_i)

    std::vector<long long> coset_elements(size_t i) const;

    /// Biggest element of each coset, the parametrization used by the
    /// identity synthesis.
    std::vector<long long> biggest() const;
};

/// All ordered exact covering systems of the given type (coset sizes), in
/// deterministic lexicographic order of the residue lists.
std::vector<CoveringSystem> enumerate_coverings(long long n, const std::vector<long long>& sizes);

/// Disjoint-cover validity predicate.
bool is_exact(const CoveringSystem& cs);

/// Synthesizes the monomial identity attached to a covering system of type
/// (-n_1,...,-n_{k-1},1,1): slots 1..k-1 carry the negative exponents, the
/// two trailing singletons are the distinguished slots of the
/// parametrization, and the positive exponent is n_k = n.  Over R the
/// modulus must be odd.  a is normalized to 1, b is fixed by the ab
/// relation, C is left for the gamma engine, sense is Strong.
MonomialIdentity covering_to_identity(const CoveringSystem& cs, const LocalField& field,
                                      const std::vector<long long>& exponents);

/// The relation solution this covering corresponds to under the
/// classification bijection (exact grid anchor for the positive slot,
/// progression-normalized negative slots).
RelationSolution covering_relation_solution(const CoveringSystem& cs, const LocalField& field,
                                            const std::vector<long long>& exponents);

/// Exponent vector (-p_1,...,-p_{k-1}, n) of a type with trailing (1,1).
std::vector<long long> covering_type_exponents(long long n, const std::vector<long long>& sizes);

} // namespace gf
