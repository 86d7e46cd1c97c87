#include "gammaforge/divisor.hpp"

#include <algorithm>
#include <numeric>

namespace gf {

Character canonical(const Character& chi)
{
    if (!chi.field.archimedean())
        raise(ErrorCode::UnsupportedField, "canonical representatives live on archimedean X_F");
    if (chi.field.kind == FieldKind::Real) {
        long long k = chi.s.floor_ll();
        return Character(chi.field, chi.s - Rational(k), chi.n + k); // twist flips per Nm
    }
    long long k = (chi.s / Rational(2)).floor_ll();
    return Character(chi.field, chi.s - Rational(2 * k), chi.n);
}

void Divisor::add(const Character& pt, long long mult)
{
    if (mult == 0) return;
    Character c = canonical(pt);
    auto it = entries_.find(c);
    if (it == entries_.end()) {
        entries_.emplace(c, mult);
    } else {
        it->second += mult;
        if (it->second == 0) entries_.erase(it);
    }
}

Divisor& Divisor::operator+=(const Divisor& o)
{
    for (const auto& [pt, m] : o.entries_) add(pt, m);
    return *this;
}

Divisor& Divisor::operator-=(const Divisor& o)
{
    for (const auto& [pt, m] : o.entries_) add(pt, -m);
    return *this;
}

Divisor Divisor::operator-() const
{
    Divisor d;
    for (const auto& [pt, m] : entries_) d.add(pt, -m);
    return d;
}

long long Divisor::degree() const
{
    long long deg = 0;
    for (const auto& [pt, m] : entries_) deg += m;
    return deg;
}

Divisor divisor_D(const Character& chi, long long N)
{
    if (N == 0) raise(ErrorCode::UnsupportedCase, "divisor D_{chi,0} undefined");
    if (chi.field.kind == FieldKind::Real && ((N % 2) + 2) % 2 == 0)
        raise(ErrorCode::EvenRootOverReal, "D_{chi,N} over R needs odd N");
    if (N < 0) return -divisor_D(mul(inv(chi), Character::nu(chi.field)), -N);
    Divisor d;
    for (long long t = 0; t < N; ++t)
        d.add(mul(chi, nm_power(chi.field, Rational(t, N))));
    return d;
}

void TowerDivisor::add(const TowerPoint& pt, long long mult)
{
    if (mult == 0) return;
    auto it = entries_.find(pt);
    if (it == entries_.end()) {
        entries_.emplace(pt, mult);
    } else {
        it->second += mult;
        if (it->second == 0) entries_.erase(it);
    }
}

TowerDivisor& TowerDivisor::operator+=(const TowerDivisor& o)
{
    for (const auto& [pt, m] : o.entries_) add(pt, m);
    return *this;
}

TowerDivisor& TowerDivisor::operator-=(const TowerDivisor& o)
{
    for (const auto& [pt, m] : o.entries_) add(pt, -m);
    return *this;
}

long long TowerDivisor::degree() const
{
    long long deg = 0;
    for (const auto& [pt, m] : entries_) deg += m;
    return deg;
}

TowerDivisor divisor_D_ext(const CyclicTower& tower, long long n, const TowerPoint& chi, int e)
{
    if (n <= 0 || tower.d_E % n != 0)
        raise(ErrorCode::BadTower, "level degree must divide the tower degree");
    long long step = tower.d_E / n;
    auto fiber = [&](const TowerPoint& c) {
        TowerDivisor d;
        long long j0 = ((c.j % step) + step) % step; // index at level n
        for (long long t = 0; t < n; ++t) d.add(TowerPoint{c.m, j0 + t * step});
        return d;
    };
    if (e == 1) return fiber(chi);
    if (e == -1) {
        // chi^{-1} nu_{F_n} at level n: (1 - m, -j mod step)
        TowerPoint dual{Rational(1) - chi.m, ((-chi.j) % step + step) % step};
        TowerDivisor d = fiber(dual);
        TowerDivisor out;
        for (const auto& [pt, m] : d.entries()) out.add(pt, -m);
        return out;
    }
    raise(ErrorCode::UnsupportedCase, "e must be +1 or -1");
}

namespace {

/// Left-hand side minus right-hand side of the relation, as a divisor.
Divisor relation_defect(const std::vector<long long>& n, const std::vector<Character>& mu,
                        const Character& xi, int case12)
{
    Divisor lhs;
    lhs.add(Character::trivial(xi.field));
    for (size_t i = 0; i < n.size(); ++i) lhs += divisor_D(mu[i], -n[i]);
    lhs -= divisor_D(xi, case12 == 1 ? -1 : 1);
    return lhs;
}

} // namespace

bool check_relation(const std::vector<long long>& exponents, const std::vector<Character>& mu,
                    const Character& xi, int case12)
{
    long long sum = std::accumulate(exponents.begin(), exponents.end(), 0LL);
    if (case12 == 1 && sum != 2) return false;
    if (case12 == 2 && sum != 0) return false;
    return relation_defect(exponents, mu, xi, case12).empty();
}

Character progression_min(const Character& mu, long long N)
{
    Character best = canonical(mu);
    for (long long t = 1; t < N; ++t) {
        Character cand = canonical(mul(mu, nm_power(mu.field, Rational(t, N))));
        if (CharOrder{}(cand, best)) best = cand;
    }
    return best;
}

bool operator==(const RelationSolution& a, const RelationSolution& b)
{
    return a.case_ == b.case_ && a.mu == b.mu && a.xi == b.xi;
}

bool operator<(const RelationSolution& a, const RelationSolution& b)
{
    CharOrder lt;
    for (size_t i = 0; i < a.mu.size() && i < b.mu.size(); ++i) {
        if (a.mu[i] != b.mu[i]) return lt(a.mu[i], b.mu[i]);
    }
    if (a.xi != b.xi) return lt(a.xi, b.xi);
    return a.case_ < b.case_;
}

namespace {

struct SearchItem {
    int slot;       // exponent slot; -1 for the xi single
    long long len;  // progression length (1 for singles)
    bool right;     // true: counts positively in the balance
    bool placed = false;
    Character base; // set when placed
};

class RelationSearch {
public:
    RelationSearch(const LocalField& field, const std::vector<long long>& n, int case12)
        : field_(field), n_(n), case12_(case12)
    {
        long long maxAbs = 1;
        std::vector<long long> absn;
        for (long long e : n) {
            absn.push_back(e);
            maxAbs = std::max(maxAbs, std::llabs(e));
        }
        L_ = lcm_abs(absn);
        twist_bound_ = std::max(2LL, 2 * maxAbs);

        for (size_t i = 0; i < n.size(); ++i) {
            if (n[i] < 0)
                items_.push_back({int(i), -n[i], false, false, {}});
            else
                items_.push_back({int(i), n[i], true, false, {}});
        }
        // case 1: left single (xi^{-1} nu); case 2: right single (xi)
        items_.push_back({-1, 1, case12 == 2, false, {}});

        balance_[canonical(Character::trivial(field))] = -1;

        // candidate window for gauge-free placements; interior twists only so
        // that positive-dimensional (gauge) families never trip the anchored
        // boundary assertion
        long long width = field.kind == FieldKind::Real ? 1 : 2;
        long long tw_lo = field.kind == FieldKind::Real ? 0 : -(twist_bound_ - 1);
        long long tw_hi = field.kind == FieldKind::Real ? 1 : twist_bound_ - 1;
        for (long long t = 0; t < width * L_; ++t)
            for (long long tw = tw_lo; tw <= tw_hi; ++tw)
                window_.push_back(Character(field, Rational(t, L_), tw));
    }

    std::vector<RelationSolution> run()
    {
        search();
        std::sort(solutions_.begin(), solutions_.end());
        solutions_.erase(std::unique(solutions_.begin(), solutions_.end()), solutions_.end());
        return solutions_;
    }

private:
    LocalField field_;
    std::vector<long long> n_;
    int case12_;
    long long L_ = 1, twist_bound_ = 2;
    std::vector<SearchItem> items_;
    std::map<Character, long long, CharOrder> balance_;
    std::vector<Character> window_;
    std::vector<RelationSolution> solutions_;

    void apply(const SearchItem& item, const Character& base, long long sign)
    {
        for (long long t = 0; t < item.len; ++t) {
            Character pt = canonical(mul(base, nm_power(field_, Rational(t, item.len))));
            long long& m = balance_[pt];
            m += sign;
            if (m == 0) balance_.erase(pt);
        }
    }

    void place_and_recurse(size_t idx, const Character& base)
    {
        SearchItem& it = items_[idx];
        it.placed = true;
        it.base = base;
        apply(it, base, it.right ? 1 : -1);
        search();
        apply(it, base, it.right ? -1 : 1);
        it.placed = false;
    }

    void search()
    {
        // find an unbalanced point
        if (!balance_.empty()) {
            auto [pt, m] = *balance_.begin();
            bool need_right = m < 0; // left excess must be covered by a right item
            for (size_t i = 0; i < items_.size(); ++i) {
                if (items_[i].placed || items_[i].right != need_right) continue;
                // A length-N progression covers pt at any of N alignments, all
                // generating the same point multiset; exploring one alignment is
                // exhaustive.  Exact representatives of positive slots are
                // expanded at record time.
                place_and_recurse(i, pt);
            }
            return;
        }
        // balanced: either done, or remaining items must cancel among themselves
        size_t next = items_.size();
        for (size_t i = 0; i < items_.size(); ++i) {
            if (!items_[i].placed) {
                next = i;
                break;
            }
        }
        if (next == items_.size()) {
            record();
            return;
        }
        for (const Character& base : window_) place_and_recurse(next, base);
    }

    void record()
    {
        RelationSolution sol;
        sol.case_ = case12_;
        sol.mu.resize(n_.size(), Character::trivial(field_));
        Character nu = Character::nu(field_);
        std::vector<size_t> right_slots;
        for (const auto& it : items_) {
            if (it.slot < 0) {
                sol.xi = case12_ == 1 ? canonical(mul(nu, inv(it.base))) : it.base;
            } else if (n_[it.slot] < 0) {
                sol.mu[it.slot] = progression_min(it.base, -n_[it.slot]);
            } else {
                sol.mu[it.slot] = it.base; // replaced by each representative below
                right_slots.push_back(size_t(it.slot));
            }
        }
        // Positive slots: chi = mu^{-1} nu anchors a degree-n grid; each of the
        // n exact representatives of mu is a distinct solution (distinct lifted
        // identities), so expand the product over them.
        std::vector<RelationSolution> batch{sol};
        for (size_t slot : right_slots) {
            std::vector<RelationSolution> next_batch;
            long long len = n_[slot];
            for (const auto& partial : batch) {
                Character chi0 = partial.mu[slot];
                for (long long t = 0; t < len; ++t) {
                    Character chi = canonical(mul(chi0, nm_power(field_, Rational(t, len))));
                    RelationSolution s = partial;
                    s.mu[slot] = canonical(mul(nu, inv(chi)));
                    next_batch.push_back(std::move(s));
                }
            }
            batch = std::move(next_batch);
        }
        for (auto& s : batch) {
            for (const auto& c : s.mu)
                if (field_.kind == FieldKind::Complex && std::llabs(c.n) >= twist_bound_)
                    raise(ErrorCode::WindowTooSmall, "relation solution touches the twist window");
            solutions_.push_back(std::move(s));
        }
    }
};

} // namespace

std::vector<RelationSolution> solve_relation(const LocalField& field,
                                             const std::vector<long long>& exponents)
{
    if (!field.archimedean())
        raise(ErrorCode::UnsupportedField, "relation solving runs over the archimedean lattice");
    for (long long e : exponents)
        if (e == 0) raise(ErrorCode::UnsupportedCase, "exponents must be nonzero");
    if (field.kind == FieldKind::Real) {
        for (long long e : exponents)
            if (e % 2 == 0)
                raise(ErrorCode::EvenRootOverReal, "over R all |n_i| must be odd");
    }
    long long sum = std::accumulate(exponents.begin(), exponents.end(), 0LL);
    int case12;
    if (sum == 2)
        case12 = 1;
    else if (sum == 0)
        case12 = 2;
    else
        return {};
    return RelationSearch(field, exponents, case12).run();
}

std::vector<Character> derive_eta(const std::vector<Character>& lambda, const Character& gamma,
                                  const std::vector<long long>& exponents,
                                  const std::vector<Rational>& m_over_d)
{
    std::vector<Character> eta;
    for (size_t i = 0; i < lambda.size(); ++i) {
        Character nu_shift = nu_power(gamma.field, -m_over_d[i]);
        eta.push_back(mul(mul(pow(gamma, exponents[i]), inv(lambda[i])), nu_shift));
    }
    return eta;
}

std::vector<Character> derive_eta(const std::vector<Character>& lambda, const Character& gamma,
                                  const std::vector<long long>& exponents)
{
    return derive_eta(lambda, gamma, exponents,
                      std::vector<Rational>(lambda.size(), Rational(1)));
}

namespace {

/// Existence of singular r_j, r_l with (lambda_j r_j^{-1})^{n_l} =
/// (lambda_l r_l^{-1})^{n_j}, decided exactly.  n_j > 0 > n_l.
bool singular_pair_equation_solvable(const Character& lj, long long nj, const Character& ll,
                                     long long nl)
{
    const LocalField& F = lj.field;
    if (F.kind == FieldKind::Real) {
        // r = lambda_{-1-m, m mod 2}, m >= 0.  s-equation:
        //   nl (sj + 1 + mj) = nj (sl + 1 + ml)
        // i.e. nj*ml + |nl|*mj = alpha := nl (sj+1) - nj (sl+1).
        Rational alphaQ = Rational(nl) * (lj.s + Rational(1)) - Rational(nj) * (ll.s + Rational(1));
        if (!alphaQ.is_integer() || alphaQ.is_negative()) return false;
        long long alpha = alphaQ.num_ll();
        for (long long ml = 0; nj * ml <= alpha; ++ml) {
            long long rest = alpha - nj * ml;
            if (rest % (-nl) != 0) continue;
            long long mj = rest / (-nl);
            // twist equation mod 2: nl (tj - mj) == nj (tl - ml)
            long long lhs = nl * (lj.n - mj), rhs = nj * (ll.n - ml);
            if (((lhs - rhs) % 2 + 2) % 2 == 0) return true;
        }
        return false;
    }
    // F = C: r = lambda_{-2-A, B}, A >= |B|, A == B (mod 2), A = m+m', B = m'-m.
    //   s-equation: nj*Al + |nl|*Aj = alpha := nl (sj+2) - nj (sl+2)
    //   twist equation: nl (tj - Bj) = nj (tl - Bl)
    Rational alphaQ = Rational(nl) * (lj.s + Rational(2)) - Rational(nj) * (ll.s + Rational(2));
    if (!alphaQ.is_integer() || alphaQ.is_negative()) return false;
    long long alpha = alphaQ.num_ll();
    for (long long Al = 0; nj * Al <= alpha; ++Al) {
        long long rest = alpha - nj * Al;
        if (rest % (-nl) != 0) continue;
        long long Aj = rest / (-nl);
        for (long long Bl = -Al; Bl <= Al; Bl += 2) {
            // nl (tj - Bj) = nj (tl - Bl) => Bj = tj - nj (tl - Bl) / nl
            long long num = nj * (ll.n - Bl);
            if (num % nl != 0) continue;
            long long Bj = lj.n - num / nl;
            if (std::llabs(Bj) > Aj) continue;
            if (((Aj - Bj) % 2 + 2) % 2 != 0) continue;
            return true;
        }
    }
    return false;
}

bool family_pair_condition_fails(const std::vector<Character>& chars,
                                 const std::vector<long long>& n)
{
    for (size_t j = 0; j < n.size(); ++j) {
        if (n[j] <= 0) continue;
        for (size_t l = 0; l < n.size(); ++l) {
            if (n[l] >= 0) continue;
            if (singular_pair_equation_solvable(chars[j], n[j], chars[l], n[l])) return true;
        }
    }
    return false;
}

} // namespace

bool pole_free(const std::vector<Character>& lambda, const std::vector<long long>& exponents)
{
    for (size_t i = 0; i < lambda.size(); ++i)
        if (exponents[i] >= 0 && is_singular(lambda[i])) return false;
    return !family_pair_condition_fails(lambda, exponents);
}

bool strong_sense(const std::vector<Character>& lambda, const std::vector<Character>& eta,
                  const std::vector<long long>& exponents)
{
    for (size_t i = 0; i < lambda.size(); ++i) {
        if (exponents[i] >= 0) {
            if (is_singular(lambda[i]) || !is_strongly_regular(lambda[i])) return false;
            if (is_singular(eta[i]) || !is_strongly_regular(eta[i])) return false;
        }
    }
    if (family_pair_condition_fails(lambda, exponents)) return false;
    if (family_pair_condition_fails(eta, exponents)) return false;
    return true;
}

Rational ab_relation(const std::vector<long long>& exponents, const std::vector<long long>& degrees,
                     int case12)
{
    Rational prod(1);
    for (size_t i = 0; i < exponents.size(); ++i)
        prod *= Rational(exponents[i]).pow(-exponents[i] * degrees[i]);
    return case12 == 1 ? -prod : prod;
}

} // namespace gf
