#include "gammaforge/covering.hpp"

#include <algorithm>
#include <numeric>

namespace gf {

std::vector<long long> CoveringSystem::coset_elements(size_t i) const
{
    auto [p, r] = cosets[i];
    long long step = n / p;
    std::vector<long long> out;
    for (long long t = 0; t < p; ++t) out.push_back(r + t * step);
    return out;
}

std::vector<long long> CoveringSystem::biggest() const
{
    std::vector<long long> out;
    for (size_t i = 0; i < cosets.size(); ++i) {
        auto e = coset_elements(i);
        out.push_back(*std::max_element(e.begin(), e.end()));
    }
    return out;
}

bool is_exact(const CoveringSystem& cs)
{
    std::vector<int> hits(cs.n, 0);
    long long total = 0;
    for (size_t i = 0; i < cs.cosets.size(); ++i) {
        auto [p, r] = cs.cosets[i];
        if (p <= 0 || cs.n % p != 0 || r < 0 || r >= cs.n / p) return false;
        for (long long e : cs.coset_elements(i)) {
            if (hits[e]++) return false;
            ++total;
        }
    }
    return total == cs.n;
}

std::vector<CoveringSystem> enumerate_coverings(long long n, const std::vector<long long>& sizes)
{
    long long total = std::accumulate(sizes.begin(), sizes.end(), 0LL);
    if (total != n) raise(ErrorCode::TypeMismatch, "coset sizes must sum to the modulus");
    for (long long p : sizes)
        if (p <= 0 || n % p != 0)
            raise(ErrorCode::TypeMismatch, "each coset size must divide the modulus");

    std::vector<CoveringSystem> out;
    CoveringSystem cur;
    cur.n = n;
    std::vector<char> covered(n, 0);

    auto rec = [&](auto&& self, size_t slot) -> void {
        if (slot == sizes.size()) {
            out.push_back(cur);
            return;
        }
        long long p = sizes[slot];
        long long step = n / p;
        for (long long r = 0; r < step; ++r) {
            bool ok = true;
            for (long long t = 0; t < p && ok; ++t) ok = !covered[r + t * step];
            if (!ok) continue;
            for (long long t = 0; t < p; ++t) covered[r + t * step] = 1;
            cur.cosets.push_back({p, r});
            self(self, slot + 1);
            cur.cosets.pop_back();
            for (long long t = 0; t < p; ++t) covered[r + t * step] = 0;
        }
    };
    rec(rec, 0);
    return out;
}

std::vector<long long> covering_type_exponents(long long n, const std::vector<long long>& sizes)
{
    if (sizes.size() < 2 || sizes[sizes.size() - 1] != 1 || sizes[sizes.size() - 2] != 1)
        raise(ErrorCode::TypeMismatch, "identity types end with two singleton cosets");
    std::vector<long long> exps;
    for (size_t i = 0; i + 2 < sizes.size(); ++i) exps.push_back(-sizes[i]);
    exps.push_back(n);
    return exps;
}

namespace {

void validate_identity_type(const CoveringSystem& cs, const LocalField& field,
                            const std::vector<long long>& exponents)
{
    if (!is_exact(cs)) raise(ErrorCode::TypeMismatch, "covering system is not exact");
    size_t k = exponents.size();
    if (cs.cosets.size() != k + 1)
        raise(ErrorCode::TypeMismatch, "covering must have one coset per negative slot plus two singletons");
    if (exponents.back() != cs.n)
        raise(ErrorCode::TypeMismatch, "positive exponent must equal the modulus");
    for (size_t i = 0; i + 1 < k; ++i) {
        if (exponents[i] >= 0 || cs.cosets[i].first != -exponents[i])
            raise(ErrorCode::TypeMismatch, "coset sizes must match the negated exponents");
    }
    if (cs.cosets[k - 1].first != 1 || cs.cosets[k].first != 1)
        raise(ErrorCode::TypeMismatch, "the two distinguished cosets must be singletons");
    if (field.kind == FieldKind::Real && cs.n % 2 == 0)
        raise(ErrorCode::EvenModulusOverReal, "over R the modulus must be odd");
    if (field.kind == FieldKind::NonArch)
        raise(ErrorCode::UnsupportedField, "covering identities are archimedean");
}

} // namespace

MonomialIdentity covering_to_identity(const CoveringSystem& cs, const LocalField& field,
                                      const std::vector<long long>& exponents)
{
    validate_identity_type(cs, field, exponents);
    size_t k = exponents.size();
    long long n = cs.n;
    std::vector<long long> p = cs.biggest();
    long long pk = p[k - 1], pk1 = p[k];

    MonomialIdentity id;
    id.field = field;
    id.exponents = exponents;
    id.degrees.assign(k, 1);
    id.case_ = IdentityCase::SumTwo;
    id.sense = Sense::Strong;

    Character nu = Character::nu(field);
    // lambda_k = Nm^{n-1-p_k}; lambda_j = nu^{-1} Nm^{(p_k-p_j)/n}.  The
    // fractional shift is the grid offset of coset j against the unit
    // singleton; for |n_j| = 1 this is the classical display.
    for (size_t j = 0; j + 1 < k; ++j) {
        Rational shift(pk - p[j], n);
        id.lambda.push_back(mul(inv(nu), nm_power(field, shift)));
    }
    id.lambda.push_back(nm_power(field, Rational(n - 1 - pk)));
    id.gamma = mul(nu, nm_power(field, Rational(pk1 - pk, n)));
    id.eta = derive_eta(id.lambda, id.gamma, exponents);

    id.a = Rational(1);
    id.b = ab_relation(exponents, id.degrees, 1); // a = 1
    return id;
}

RelationSolution covering_relation_solution(const CoveringSystem& cs, const LocalField& field,
                                            const std::vector<long long>& exponents)
{
    MonomialIdentity id = covering_to_identity(cs, field, exponents);
    size_t k = exponents.size();
    std::vector<long long> p = cs.biggest();
    Character nu = Character::nu(field);

    RelationSolution sol;
    sol.case_ = 1;
    for (size_t i = 0; i + 1 < k; ++i)
        sol.mu.push_back(progression_min(mul(id.lambda[i], nu), -exponents[i]));
    // positive slot: grid anchored so the unit singleton sits at position p_k
    sol.mu.push_back(canonical(mul(nu, nm_power(field, Rational(p[k - 1], cs.n)))));
    sol.xi = canonical(id.gamma);
    return sol;
}

} // namespace gf
