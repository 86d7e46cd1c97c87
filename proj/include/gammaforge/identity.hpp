#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gammaforge/character.hpp"
#include "gammaforge/gamma.hpp"

#include <json.hpp>

namespace gf {

enum class IdentityCase { SumTwo, SumZero };
enum class Sense { Weak, Strong };

/// Full data of one monomial Fourier identity
///   hat G^{n_1..n_k,a}_{lambda} = C G^{m_1..m_k,b}_{eta},
/// with m_i = n_i (SumTwo) or m_i = -n_i (SumZero), the shift character
/// gamma with eta_i lambda_i nu^{M_i/D_i} = gamma^{n_i}, and scale constants
/// a (normalized to 1 by the synthesizers) and b with ab pinned by the
/// exponent data.  Degrees D_i are 1 on scalar slots and the invariant
/// degree on prehomogeneous slots.
struct MonomialIdentity {
    LocalField field;
    std::vector<long long> exponents; // n_i, nonzero
    std::vector<long long> degrees;   // D_i, positive
    std::vector<Character> lambda;
    std::vector<Character> eta;
    Character gamma;
    IdentityCase case_ = IdentityCase::SumTwo;
    Rational a{1};
    Rational b{1};
    std::optional<cdouble> C;
    Sense sense = Sense::Weak;

    size_t size() const { return exponents.size(); }

    /// m_i of the transformed side.
    long long m(size_t i) const
    {
        return case_ == IdentityCase::SumTwo ? exponents[i] : -exponents[i];
    }

    /// Checks eta_i lambda_i nu^{M_i/D_i} = gamma^{n_i} for scalar slots
    /// (degrees 1); slots with degree > 1 use M_i/D_i supplied separately.
    bool character_invariant_holds(const std::vector<Rational>& m_over_d) const;
    bool character_invariant_holds() const; // all slots M_i/D_i = 1

    Rational ab() const { return a * b; }
};

nlohmann::json character_to_json(const Character& c);
Character character_from_json(const nlohmann::json& j, const LocalField* expected = nullptr);

nlohmann::json identity_to_json(const MonomialIdentity& id);
MonomialIdentity identity_from_json(const nlohmann::json& j);

/// Renders the identity in display form, hat G^{...}_{...} = C G^{...}_{...}.
std::string identity_to_latex(const MonomialIdentity& id);

std::string format_double_15(double x);
nlohmann::json complex_to_json(const cdouble& z);

} // namespace gf
