#pragma once

#include <string>

#include "gammaforge/errors.hpp"

namespace gf {

enum class FieldKind { Real, Complex, NonArch };

/// A local field: the reals, the complexes, or a nonarchimedean field
/// identified by its residue field size q (a prime power >= 2).
struct LocalField {
    FieldKind kind = FieldKind::Real;
    long long q = 0; // residue field size, NonArch only

    static LocalField real() { return {FieldKind::Real, 0}; }
    static LocalField complex_field() { return {FieldKind::Complex, 0}; }
    static LocalField nonarch(long long q);

    bool archimedean() const { return kind != FieldKind::NonArch; }
    int real_dim() const { return kind == FieldKind::Complex ? 2 : 1; }

    friend bool operator==(const LocalField& a, const LocalField& b)
    {
        return a.kind == b.kind && (a.kind != FieldKind::NonArch || a.q == b.q);
    }
    friend bool operator!=(const LocalField& a, const LocalField& b) { return !(a == b); }

    std::string to_string() const;
};

/// q must be a prime power; used to validate NonArch construction.
bool is_prime_power(long long q);

} // namespace gf
