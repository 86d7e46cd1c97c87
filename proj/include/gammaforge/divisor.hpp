#pragma once

#include <map>
#include <vector>

#include "gammaforge/character.hpp"

namespace gf {

/// Canonical representative of a character in X_F = X(F^*)/<Nm>:
/// s in [0,1) over R (twist adjusted by the shift parity), s in [0,2) over C
/// (twist unchanged).
Character canonical(const Character& chi);

/// Ordering used for divisor keys: (s, n) lexicographic.
struct CharOrder {
    bool operator()(const Character& a, const Character& b) const
    {
        if (a.s != b.s) return a.s < b.s;
        return a.n < b.n;
    }
};

/// Finite integer-multiplicity divisor over the archimedean lattice X_F.
/// Keys are canonical; zero multiplicities pruned.
class Divisor {
public:
    void add(const Character& pt, long long mult = 1);
    Divisor& operator+=(const Divisor& o);
    Divisor& operator-=(const Divisor& o);
    Divisor operator-() const;
    friend Divisor operator+(Divisor a, const Divisor& b) { return a += b; }
    friend Divisor operator-(Divisor a, const Divisor& b) { return a -= b; }
    friend bool operator==(const Divisor& a, const Divisor& b) { return a.entries_ == b.entries_; }

    long long degree() const;
    bool empty() const { return entries_.empty(); }
    const std::map<Character, long long, CharOrder>& entries() const { return entries_; }

private:
    std::map<Character, long long, CharOrder> entries_;
};

/// D_{chi,N} = (chi) + (chi Nm^{1/N}) + ... + (chi Nm^{(N-1)/N}) for N > 0,
/// D_{chi,-N} = -D_{chi^{-1} nu, N}.  Over R, |N| must be odd.
Divisor divisor_D(const Character& chi, long long N);

/// Point of the cyclic-tower lattice X_{F,E} ~ Z x C_{d_E}: nu-exponent m
/// (rational, denominators divide d_E) and Galois-character index j.
struct TowerPoint {
    Rational m;
    long long j = 0;

    friend bool operator<(const TowerPoint& a, const TowerPoint& b)
    {
        if (a.m != b.m) return a.m < b.m;
        return a.j < b.j;
    }
    friend bool operator==(const TowerPoint& a, const TowerPoint& b)
    {
        return a.m == b.m && a.j == b.j;
    }
};

struct CyclicTower {
    LocalField base; // NonArch
    long long d_E = 1;
};

class TowerDivisor {
public:
    void add(const TowerPoint& pt, long long mult = 1);
    TowerDivisor& operator+=(const TowerDivisor& o);
    TowerDivisor& operator-=(const TowerDivisor& o);
    friend TowerDivisor operator+(TowerDivisor a, const TowerDivisor& b) { return a += b; }
    friend TowerDivisor operator-(TowerDivisor a, const TowerDivisor& b) { return a -= b; }
    friend bool operator==(const TowerDivisor& a, const TowerDivisor& b)
    {
        return a.entries_ == b.entries_;
    }
    long long degree() const;
    const std::map<TowerPoint, long long>& entries() const { return entries_; }

private:
    std::map<TowerPoint, long long> entries_;
};

/// Fiber divisor D(chi) of a point chi at the degree-n level of the tower
/// (n | d_E): the n points (m, j + t d_E/n), t = 0..n-1.  e = -1 gives
/// D(chi,-1) = -D(chi^{-1} nu_{F_n}).
TowerDivisor divisor_D_ext(const CyclicTower& tower, long long n, const TowerPoint& chi, int e);

/// One solution of the classification relation
///   D_{1,1} + sum_i D_{mu_i, -n_i} = D_{xi, -1}   (case 1, sum n_i = 2)
///   D_{1,1} + sum_i D_{mu_i, -n_i} = D_{xi, +1}   (case 2, sum n_i = 0).
/// mu_i for positive-exponent slots are exact grid anchors (distinct
/// representatives are distinct solutions); negative-slot mu_i are
/// normalized to the minimal point of their Nm^{1/|n_i|}-progression.
struct RelationSolution {
    std::vector<Character> mu;
    Character xi;
    int case_ = 1;

    friend bool operator==(const RelationSolution& a, const RelationSolution& b);
    friend bool operator<(const RelationSolution& a, const RelationSolution& b);
};

/// Exact multiset check of the relation for given data.
bool check_relation(const std::vector<long long>& exponents, const std::vector<Character>& mu,
                    const Character& xi, int case12);

/// Complete finite search for relation solutions with s-coordinates in
/// (1/lcm|n_i|) Z over the canonical window; twists bounded by
/// max(2, 2 max|n_i|) over C.  Raises WindowTooSmall if a solution touches
/// the twist window boundary.
std::vector<RelationSolution> solve_relation(const LocalField& field,
                                             const std::vector<long long>& exponents);

/// eta_i = gamma^{n_i} lambda_i^{-1} nu^{-M_i/D_i}.
std::vector<Character> derive_eta(const std::vector<Character>& lambda, const Character& gamma,
                                  const std::vector<long long>& exponents,
                                  const std::vector<Rational>& m_over_d);
std::vector<Character> derive_eta(const std::vector<Character>& lambda, const Character& gamma,
                                  const std::vector<long long>& exponents);

/// Pole-freeness of G^{n,a}_{lambda}: no slot with n_i >= 0 carries a
/// singular character, and the cross-slot singular-pair equation
/// (lambda_j r_j^{-1})^{n_l} = (lambda_l r_l^{-1})^{n_j} (n_j > 0 > n_l)
/// has no solution.  Exact Diophantine decision.
bool pole_free(const std::vector<Character>& lambda, const std::vector<long long>& exponents);

/// Weak-to-strong criterion: strong regularity of lambda_i, eta_i on
/// nonnegative slots plus strict failure of the singular-pair equation for
/// both families.
bool strong_sense(const std::vector<Character>& lambda, const std::vector<Character>& eta,
                  const std::vector<long long>& exponents);

/// Required value of ab (SumTwo) or a/b (SumZero): -prod n_i^{-n_i D_i}
/// resp. prod n_i^{-n_i D_i}, exact with sign.
Rational ab_relation(const std::vector<long long>& exponents, const std::vector<long long>& degrees,
                     int case12);

/// Normalizes mu to the smallest point of its Nm^{1/N}-progression.
Character progression_min(const Character& mu, long long N);

} // namespace gf
