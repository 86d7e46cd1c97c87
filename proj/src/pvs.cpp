#include "gammaforge/pvs.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "gammaforge/gamma.hpp"
#include "gammaforge/divisor.hpp"

namespace gf {

// ---------------------------------------------------------------------------
// RationalFunc
// ---------------------------------------------------------------------------

bool RationalFunc::is_polynomial() const
{
    return den.terms().size() == 1 && den.terms().begin()->first ==
                                          Polynomial::Exps(den.nvars(), 0);
}

namespace {

Rational content(const Polynomial& p)
{
    // gcd of coefficients: gcd of numerators over lcm of denominators
    int128 gn = 0;
    int128 ld = 1;
    auto gcd = [](int128 a, int128 b) {
        if (a < 0) a = -a;
        if (b < 0) b = -b;
        while (b) {
            int128 t = a % b;
            a = b;
            b = t;
        }
        return a;
    };
    for (const auto& [e, c] : p.terms()) {
        gn = gcd(gn, c.num());
        ld = ld / gcd(ld, c.den()) * c.den();
    }
    if (gn == 0) return Rational(1);
    return Rational::from_int128(gn, ld);
}

} // namespace

void RationalFunc::reduce()
{
    if (den.is_zero()) raise(ErrorCode::SingularHessian, "zero denominator");
    Rational cn = content(num);
    Rational cd = content(den);
    // scale so den has content 1 with positive leading coefficient
    Rational scale = Rational(1) / cd;
    if (den.terms().begin()->second.is_negative()) scale = -scale;
    num = (scale * num);
    den = (scale * den);
    (void)cn;
}

RationalFunc operator+(const RationalFunc& a, const RationalFunc& b)
{
    return {a.num * b.den + b.num * a.den, a.den * b.den};
}

RationalFunc operator-(const RationalFunc& a, const RationalFunc& b)
{
    return {a.num * b.den - b.num * a.den, a.den * b.den};
}

RationalFunc operator*(const RationalFunc& a, const RationalFunc& b)
{
    return {a.num * b.num, a.den * b.den};
}

RationalFunc RationalFunc::pow(int k) const
{
    if (k >= 0) return {num.pow(k), den.pow(k)};
    if (num.is_zero()) raise(ErrorCode::SingularHessian, "0^negative power");
    return {den.pow(-k), num.pow(-k)};
}

RationalFunc RationalFunc::derivative(int var) const
{
    return {num.derivative(var) * den - num * den.derivative(var), den * den};
}

Rational RationalFunc::eval(const std::vector<Rational>& x) const
{
    Rational d = den.eval(x);
    if (d.is_zero()) raise(ErrorCode::SingularHessian, "evaluation on the pole divisor");
    return num.eval(x) / d;
}

std::complex<double> RationalFunc::eval(const std::vector<std::complex<double>>& x) const
{
    return num.eval(x) / den.eval(x);
}

bool RationalFunc::homogeneous_of_degree(int& deg) const
{
    if (!num.is_homogeneous() || !den.is_homogeneous()) return false;
    deg = num.total_degree() - den.total_degree();
    return true;
}

// ---------------------------------------------------------------------------
// deterministic rational test points
// ---------------------------------------------------------------------------

std::vector<Rational> random_rational_point(int nvars, unsigned long long& state)
{
    auto next = [&state]() {
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        return (state >> 33);
    };
    std::vector<Rational> x;
    for (int i = 0; i < nvars; ++i) {
        long long numr = (long long)(next() % 19) - 9; // [-9, 9]
        long long denr = 1 + (long long)(next() % 3);  // {1,2,3}
        if (numr == 0) numr = 1;
        x.push_back(Rational(numr, denr));
    }
    return x;
}

// ---------------------------------------------------------------------------
// mlt operations
// ---------------------------------------------------------------------------

std::pair<Rational, std::vector<long long>> mlt_monomial(const std::vector<long long>& exponents)
{
    Rational scale(1);
    for (long long n : exponents) {
        if (n == 0) raise(ErrorCode::UnsupportedCase, "monomial exponents must be nonzero");
        scale *= Rational(n).pow(-n);
    }
    return {scale, exponents};
}

namespace {

/// Gradient-over-f map x -> f'(x)/f(x), evaluated exactly.
std::vector<Rational> log_gradient_at(const RationalFunc& f, const std::vector<Rational>& x)
{
    Rational fx = f.eval(x);
    if (fx.is_zero()) raise(ErrorCode::SingularHessian, "point on the zero divisor");
    std::vector<Rational> y;
    for (int i = 0; i < f.nvars(); ++i) y.push_back(f.derivative(i).eval(x) / fx);
    return y;
}

bool hessian_probe(const RationalFunc& f, unsigned long long& state)
{
    if (f.is_polynomial()) {
        for (int tries = 0; tries < 8; ++tries) {
            auto x = random_rational_point(f.nvars(), state);
            try {
                if (hessian_nonsingular_mod_p(f.num, x)) return true;
            } catch (const Error&) {
                continue;
            }
        }
        return false;
    }
    // rational f: numeric probe of det f'' at a random point
    for (int tries = 0; tries < 8; ++tries) {
        auto xq = random_rational_point(f.nvars(), state);
        std::vector<std::complex<double>> x;
        for (const auto& q : xq) x.push_back(q.to_double());
        int n = f.nvars();
        std::vector<std::vector<std::complex<double>>> h(n, std::vector<std::complex<double>>(n));
        bool bad = false;
        for (int i = 0; i < n && !bad; ++i) {
            RationalFunc di = f.derivative(i);
            for (int j = 0; j < n; ++j) {
                auto v = di.derivative(j).eval(x);
                if (!std::isfinite(std::abs(v))) {
                    bad = true;
                    break;
                }
                h[i][j] = v;
            }
        }
        if (bad) continue;
        // LU determinant
        std::complex<double> det = 1.0;
        for (int c = 0; c < n; ++c) {
            int piv = -1;
            double best = 1e-300;
            for (int r = c; r < n; ++r)
                if (std::abs(h[r][c]) > best) {
                    best = std::abs(h[r][c]);
                    piv = r;
                }
            if (piv < 0) return false;
            std::swap(h[piv], h[c]);
            det *= h[c][c];
            for (int r = c + 1; r < n; ++r) {
                auto fr = h[r][c] / h[c][c];
                for (int j = c; j < n; ++j) h[r][j] -= fr * h[c][j];
            }
        }
        if (std::abs(det) > 1e-8) return true;
    }
    return false;
}

} // namespace

MltCheck mlt_verify(const RationalFunc& f, const RationalFunc& f_star, unsigned long long seed)
{
    int df = 0, ds = 0;
    if (!f.homogeneous_of_degree(df) || !f_star.homogeneous_of_degree(ds))
        raise(ErrorCode::DegreeMismatch, "mlt inputs must be homogeneous");
    if (df != ds) raise(ErrorCode::DegreeMismatch, "mlt inputs must have equal degrees");
    unsigned long long state = seed * 2654435761ull + 14695981039346656037ull;
    if (!hessian_probe(f, state))
        raise(ErrorCode::DegenerateHessian, "det f'' vanishes at random probes");

    // exact identity route: f_star(grad f) == c * f^{d-1} for small polynomial pairs
    if (f.is_polynomial() && f_star.is_polynomial() && df >= 1 && df <= 3 && f.nvars() <= 10) {
        std::vector<Polynomial> grad = f.num.gradient();
        Polynomial lhs = f_star.num.compose(grad);
        Polynomial fpow = f.num.pow(df - 1);
        // find the proportionality constant from any matching term
        if (lhs.is_zero() && fpow.is_zero()) return {true, Rational(0)};
        if (fpow.is_zero() || lhs.is_zero()) return {false, Rational(0)};
        const auto& [e0, c0] = *fpow.terms().begin();
        auto it = lhs.terms().find(e0);
        if (it == lhs.terms().end()) return {false, Rational(0)};
        Rational c = it->second / c0;
        Rational denc = f_star.den.terms().begin()->second; // constant denominator
        if (lhs == (c * fpow)) return {true, c / denc};
        return {false, Rational(0)};
    }

    // random-point route (Schwartz-Zippel confidence), 20 exact points
    Rational c(0);
    bool have = false;
    int done = 0;
    for (int tries = 0; tries < 400 && done < 20; ++tries) {
        auto x = random_rational_point(f.nvars(), state);
        try {
            auto y = log_gradient_at(f, x);
            Rational v = f_star.eval(y) * f.eval(x);
            if (!have) {
                c = v;
                have = true;
            } else if (v != c) {
                return {false, Rational(0)};
            }
            ++done;
        } catch (const Error&) {
            continue; // pole or zero divisor hit; resample
        }
    }
    if (done < 20) raise(ErrorCode::DegenerateHessian, "could not find 20 admissible sample points");
    return {true, c};
}

bool mlt_compose_identity(const RationalFunc& f, const RationalFunc& f_star, int npoints,
                          unsigned long long seed)
{
    unsigned long long state = seed * 0x9e3779b97f4a7c15ull + 0xda942042e4dd58b5ull;
    int done = 0;
    for (int tries = 0; tries < npoints * 20 && done < npoints; ++tries) {
        auto x = random_rational_point(f.nvars(), state);
        try {
            auto y = log_gradient_at(f, x);
            auto z = log_gradient_at(f_star, y);
            if (z != x) return false;
            ++done;
        } catch (const Error&) {
            continue;
        }
    }
    return done == npoints;
}

namespace {

Polynomial embed(const Polynomial& p, int total, int offset)
{
    Polynomial out(total);
    for (const auto& [e, c] : p.terms()) {
        Polynomial::Exps ne(total, 0);
        for (size_t i = 0; i < e.size(); ++i) ne[offset + int(i)] = e[i];
        out.add_term(ne, c);
    }
    return out;
}

RationalFunc embed(const RationalFunc& f, int total, int offset)
{
    return {embed(f.num, total, offset), embed(f.den, total, offset)};
}

} // namespace

std::pair<RationalFunc, RationalFunc> mlt_pair(const Polynomial& f, const RationalFunc& f_star,
                                               int d)
{
    int M = f.nvars();
    int checkdeg = 0;
    if (f.total_degree() != d)
        raise(ErrorCode::DegreeMismatch, "declared degree disagrees with deg f");
    RationalFunc fr{f};
    if (!fr.homogeneous_of_degree(checkdeg) || checkdeg != d)
        raise(ErrorCode::DegreeMismatch, "f must be homogeneous of the declared degree");

    // F(x,y) = f'(x).y + f(x) on x-block [0,M), y-block [M,2M)
    Polynomial F = embed(f, 2 * M, 0);
    for (int i = 0; i < M; ++i)
        F += embed(f.derivative(i), 2 * M, 0) * Polynomial::variable(2 * M, M + i);

    // F_*(x_*,y_*) = (d-1)^{1-d} (f_*'(y_*).x_* - f_*(x_*))^{d-1} f_*(y_*)^{2-d}
    RationalFunc fs_x = embed(f_star, 2 * M, 0);
    RationalFunc fs_y = embed(f_star, 2 * M, M);
    RationalFunc inner = -fs_x;
    for (int i = 0; i < M; ++i) {
        RationalFunc di = embed(f_star.derivative(i), 2 * M, M);
        inner = inner + di * RationalFunc{Polynomial::variable(2 * M, i)};
    }
    RationalFunc Fs;
    if (d == 1) {
        Fs = fs_y; // 0^0 = 1 convention: both power factors collapse
    } else {
        Rational lead = Rational(d - 1).pow(1 - d);
        Fs = inner.pow(d - 1) * fs_y.pow(2 - d);
        Fs.num = lead * Fs.num;
        Fs.reduce();
    }
    return {RationalFunc{F}, Fs};
}

// ---------------------------------------------------------------------------
// built-in descriptors
// ---------------------------------------------------------------------------

Polynomial pfaffian_polynomial(int two_n)
{
    if (two_n % 2 != 0 || two_n < 2) raise(ErrorCode::UnsupportedCase, "even size required");
    int nvars = two_n * (two_n - 1) / 2;
    auto var_index = [two_n](int i, int j) {
        // i < j, row-major upper triangle
        int idx = 0;
        for (int r = 0; r < i; ++r) idx += two_n - 1 - r;
        return idx + (j - i - 1);
    };
    // recursive expansion over matchings of indices [present set]
    std::vector<int> present(two_n);
    std::iota(present.begin(), present.end(), 0);
    std::function<Polynomial(std::vector<int>)> rec = [&](std::vector<int> idx) -> Polynomial {
        if (idx.empty()) return Polynomial::constant(nvars, Rational(1));
        Polynomial acc(nvars);
        int i = idx[0];
        for (size_t t = 1; t < idx.size(); ++t) {
            int j = idx[t];
            std::vector<int> rest;
            for (size_t u = 1; u < idx.size(); ++u)
                if (u != t) rest.push_back(idx[u]);
            Rational sign = (t % 2 == 1) ? Rational(1) : Rational(-1);
            acc += sign * (Polynomial::variable(nvars, var_index(i, j)) * rec(rest));
        }
        return acc;
    };
    return rec(present);
}

namespace {

Polynomial det_polynomial(int n, bool symmetric, bool halved_offdiag)
{
    // variables: symmetric: diag x_0..x_{n-1}, then upper triangle row-major;
    // full: row-major n^2
    int nvars = symmetric ? n * (n + 1) / 2 : n * n;
    auto entry = [&](int i, int j) -> Polynomial {
        if (!symmetric) return Polynomial::variable(nvars, i * n + j);
        if (i == j) return Polynomial::variable(nvars, i);
        int a = std::min(i, j), b = std::max(i, j);
        int idx = n;
        for (int r = 0; r < a; ++r) idx += n - 1 - r;
        idx += b - a - 1;
        Polynomial v = Polynomial::variable(nvars, idx);
        if (halved_offdiag) v = Rational(1, 2) * v;
        return v;
    };
    // Leibniz over permutations (n <= 4)
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Polynomial acc(nvars);
    do {
        int inv = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inv;
        Polynomial term = Polynomial::constant(nvars, inv % 2 ? Rational(-1) : Rational(1));
        for (int i = 0; i < n; ++i) term *= entry(i, perm[i]);
        acc += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return acc;
}

// --- split octonions as Zorn vector matrices, coordinates (a, v1..3, w1..3, b)

struct OctPoly {
    Polynomial a, b;
    Polynomial v[3], w[3];
};

OctPoly oct_from_vars(int nvars, int offset)
{
    OctPoly c{Polynomial(nvars), Polynomial(nvars), {}, {}};
    c.a = Polynomial::variable(nvars, offset + 0);
    for (int i = 0; i < 3; ++i) c.v[i] = Polynomial::variable(nvars, offset + 1 + i);
    for (int i = 0; i < 3; ++i) c.w[i] = Polynomial::variable(nvars, offset + 4 + i);
    c.b = Polynomial::variable(nvars, offset + 7);
    return c;
}

OctPoly oct_mul(const OctPoly& x, const OctPoly& y)
{
    auto dot = [](const Polynomial* u, const Polynomial* v) {
        Polynomial s = u[0] * v[0];
        s += u[1] * v[1];
        s += u[2] * v[2];
        return s;
    };
    auto cross = [](const Polynomial* u, const Polynomial* v, Polynomial* out) {
        out[0] = u[1] * v[2] - u[2] * v[1];
        out[1] = u[2] * v[0] - u[0] * v[2];
        out[2] = u[0] * v[1] - u[1] * v[0];
    };
    OctPoly r;
    r.a = x.a * y.a + dot(x.v, y.w);
    r.b = x.b * y.b + dot(x.w, y.v);
    Polynomial wxw[3], vxv[3];
    cross(x.w, y.w, wxw);
    cross(x.v, y.v, vxv);
    for (int i = 0; i < 3; ++i) {
        r.v[i] = x.a * y.v[i] + y.b * x.v[i] - wxw[i];
        r.w[i] = y.a * x.w[i] + x.b * y.w[i] + vxv[i];
    }
    return r;
}

Polynomial oct_norm(const OctPoly& c)
{
    Polynomial n = c.a * c.b;
    for (int i = 0; i < 3; ++i) n -= c.v[i] * c.w[i];
    return n;
}

Polynomial oct_re(const OctPoly& c) { return Rational(1, 2) * (c.a + c.b); }

/// Freudenthal cubic of the 27-dimensional exceptional Jordan algebra over
/// split octonions: N = xi1 xi2 xi3 - sum_i xi_i n(c_i) + 2 Re(c1 c2 c3).
Polynomial e6_cubic_polynomial()
{
    const int nvars = 27;
    Polynomial xi1 = Polynomial::variable(nvars, 0);
    Polynomial xi2 = Polynomial::variable(nvars, 1);
    Polynomial xi3 = Polynomial::variable(nvars, 2);
    OctPoly c1 = oct_from_vars(nvars, 3);
    OctPoly c2 = oct_from_vars(nvars, 11);
    OctPoly c3 = oct_from_vars(nvars, 19);
    Polynomial N = xi1 * xi2 * xi3;
    N -= xi1 * oct_norm(c1);
    N -= xi2 * oct_norm(c2);
    N -= xi3 * oct_norm(c3);
    N += Rational(2) * oct_re(oct_mul(oct_mul(c1, c2), c3));
    return N;
}

/// The norm-form pairing swaps each octonion block (a,v,w,b) -> (b,-w,-v,a);
/// the dual invariant in plain coordinates is N composed with that swap.
Polynomial e6_dual_swap(const Polynomial& N)
{
    const int nvars = 27;
    std::vector<Polynomial> subst(nvars, Polynomial(nvars));
    for (int i = 0; i < 3; ++i) subst[i] = Polynomial::variable(nvars, i);
    for (int blk = 0; blk < 3; ++blk) {
        int off = 3 + 8 * blk;
        subst[off + 0] = Polynomial::variable(nvars, off + 7);       // a <- b
        subst[off + 7] = Polynomial::variable(nvars, off + 0);       // b <- a
        for (int i = 0; i < 3; ++i) {
            subst[off + 1 + i] = -Polynomial::variable(nvars, off + 4 + i); // v <- -w
            subst[off + 4 + i] = -Polynomial::variable(nvars, off + 1 + i); // w <- -v
        }
    }
    return N.compose(subst);
}

} // namespace

PVSDescriptor builtin_pvs(const std::string& name)
{
    auto parse_arg = [&](const std::string& prefix) -> long long {
        if (name.rfind(prefix + "(", 0) != 0 || name.back() != ')')
            raise(ErrorCode::UnknownName, "unknown space " + name);
        return std::stoll(name.substr(prefix.size() + 1, name.size() - prefix.size() - 2));
    };

    PVSDescriptor V;
    V.name = name;
    if (name.rfind("power(", 0) == 0) {
        long long n = parse_arg("power");
        if (n < 1) raise(ErrorCode::UnknownName, "power(n) needs n >= 1");
        V.M = 1;
        V.D = n;
        V.f = RationalFunc{Polynomial::variable(1, 0, int(n))};
        auto [scale, exps] = mlt_monomial({n});
        V.f_star = RationalFunc{scale * Polynomial::variable(1, 0, int(n))};
        for (long long j = 1; j <= n; ++j) V.b_roots.push_back(Rational(j, n));
        return V;
    }
    if (name.rfind("monomial(", 0) == 0) {
        long long k = parse_arg("monomial");
        if (k < 1) raise(ErrorCode::UnknownName, "monomial(k) needs k >= 1");
        V.M = k;
        V.D = k;
        Polynomial f = Polynomial::constant(int(k), Rational(1));
        for (int i = 0; i < k; ++i) f *= Polynomial::variable(int(k), i);
        V.f = RationalFunc{f};
        V.f_star = V.f;
        V.b_roots.assign(size_t(k), Rational(1));
        return V;
    }
    if (name == "sym_det(3)") {
        V.M = 6;
        V.D = 3;
        V.f = RationalFunc{det_polynomial(3, true, false)};
        V.f_star = RationalFunc{det_polynomial(3, true, true)};
        V.b_roots = {Rational(1), Rational(3, 2), Rational(2)};
        return V;
    }
    if (name.rfind("det(", 0) == 0) {
        long long n = parse_arg("det");
        if (n < 1 || n > 4) raise(ErrorCode::UnknownName, "det(n) supported for n <= 4");
        V.M = n * n;
        V.D = n;
        V.f = RationalFunc{det_polynomial(int(n), false, false)};
        V.f_star = V.f;
        for (long long j = 1; j <= n; ++j) V.b_roots.push_back(Rational(j));
        return V;
    }
    if (name == "pfaffian(6)") {
        V.M = 15;
        V.D = 3;
        V.f = RationalFunc{pfaffian_polynomial(6)};
        V.f_star = V.f;
        V.b_roots = {Rational(1), Rational(3), Rational(5)};
        return V;
    }
    if (name == "e6_cubic") {
        V.M = 27;
        V.D = 3;
        Polynomial N = e6_cubic_polynomial();
        V.f = RationalFunc{N};
        V.f_star = RationalFunc{e6_dual_swap(N)};
        V.b_roots = {Rational(1), Rational(5), Rational(9)};
        return V;
    }
    if (name.rfind("quad_times_linear(", 0) == 0) {
        long long N = parse_arg("quad_times_linear");
        if (N < 1) raise(ErrorCode::UnknownName, "quad_times_linear(N) needs N >= 1");
        int nv = int(N) + 1;
        Polynomial Q(nv), Qd(nv);
        for (int i = 0; i < N; ++i) {
            Q += Polynomial::variable(nv, i, 2);
            Qd += Polynomial::variable(nv, i, 2);
        }
        V.M = N + 1;
        V.D = 3;
        V.f = RationalFunc{Q * Polynomial::variable(nv, nv - 1)};
        V.f_star = RationalFunc{Rational(1, 4) * (Qd * Polynomial::variable(nv, nv - 1))};
        V.b_roots = {Rational(1), Rational(1), Rational(N, 2)};
        return V;
    }
    raise(ErrorCode::UnknownName, "unknown space " + name);
}

// ---------------------------------------------------------------------------
// Gamma of a space, identities
// ---------------------------------------------------------------------------

bool b_roots_symmetric(const PVSDescriptor& V)
{
    Rational center = (Rational(1) + Rational(V.M) / Rational(V.D)) / Rational(2);
    std::vector<Rational> a = V.b_roots;
    std::vector<Rational> b;
    for (const auto& r : a) b.push_back(Rational(2) * center - r);
    auto key = [](const Rational& r) { return std::make_pair((long long)r.num(), (long long)r.den()); };
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    (void)key;
    return a == b;
}

namespace {

void require_gamma_assumptions(const PVSDescriptor& V)
{
    if (!(Rational(V.M) / Rational(V.D)).is_integer())
        raise(ErrorCode::AssumptionViolated, "M/D must be an integer for the Gamma product formula");
    for (const auto& r : V.b_roots)
        if (!(r * Rational(2)).is_integer())
            raise(ErrorCode::AssumptionViolated, "b-roots must be integers or half-integers");
    if (!b_roots_symmetric(V))
        raise(ErrorCode::AssumptionViolated,
              "b-roots are not symmetric about (1+M/D)/2; the product formula does not apply");
}

} // namespace

cdouble gamma_pvs(const PVSDescriptor& V, cdouble s, long long n)
{
    require_gamma_assumptions(V);
    LocalField C = LocalField::complex_field();
    Rational mOverD = Rational(V.M) / Rational(V.D);
    cdouble acc = 1.0;
    for (const auto& sj : V.b_roots) {
        double shift = 2.0 * (sj - mOverD).to_double();
        acc *= gamma_f(C, s + shift, n).value;
    }
    return acc;
}

std::vector<PvsIdentity> pvs_identities(const PVSDescriptor& V)
{
    require_gamma_assumptions(V);
    if (V.D != 3)
        raise(ErrorCode::AssumptionViolated, "identity synthesis implemented for degree-3 spaces");
    LocalField F = LocalField::complex_field();
    Rational mOverD = Rational(V.M) / Rational(V.D);

    std::vector<Rational> roots = V.b_roots;
    std::sort(roots.begin(), roots.end());
    std::vector<PvsIdentity> out;
    do {
        PvsIdentity pid;
        pid.sigma = roots;
        Rational s1 = roots[0], s2 = roots[1], s3 = roots[2];
        // t-slot and invariant-slot characters; q, p are the |y|^q |f|^p data
        Rational et = s1 - s2 - Rational(1);
        Rational ew = s2 - mOverD;
        Rational et_dual = s3 - s1 - Rational(1);
        Rational ew_dual = Rational(1) - s3;
        pid.q = Rational(2) * et;
        pid.p = Rational(2) * ew;
        pid.q_dual = Rational(2) * et_dual;
        pid.p_dual = Rational(2) * ew_dual;

        MonomialIdentity id;
        id.field = F;
        id.exponents = {-1, 1};
        id.degrees = {1, V.D};
        id.lambda = {nu_power(F, et), nu_power(F, ew)};
        id.gamma = nu_power(F, s2 - s3 + Rational(1));
        id.eta = derive_eta(id.lambda, id.gamma, id.exponents,
                            {Rational(1), mOverD});
        id.case_ = IdentityCase::SumTwo;
        id.sense = Sense::Weak;
        id.a = Rational(1);
        id.b = ab_relation(id.exponents, id.degrees, 1);
        pid.identity = id;
        out.push_back(std::move(pid));
    } while (std::next_permutation(roots.begin(), roots.end()));
    return out;
}

MonomialIdentity expand_pvs_identity(const PvsIdentity& pid, const PVSDescriptor& V)
{
    const MonomialIdentity& id = pid.identity;
    LocalField F = id.field;
    Rational mOverD = Rational(V.M) / Rational(V.D);
    MonomialIdentity ex;
    ex.field = F;
    ex.case_ = id.case_;
    ex.sense = id.sense;
    ex.gamma = id.gamma;
    ex.a = id.a;
    ex.exponents.push_back(id.exponents[0]);
    ex.degrees.push_back(1);
    ex.lambda.push_back(id.lambda[0]);
    for (const auto& sj : V.b_roots) {
        ex.exponents.push_back(id.exponents[1]);
        ex.degrees.push_back(1);
        ex.lambda.push_back(mul(id.lambda[1], nu_power(F, sj - mOverD)));
    }
    ex.eta = derive_eta(ex.lambda, ex.gamma, ex.exponents);
    ex.b = ab_relation(ex.exponents, ex.degrees, ex.case_ == IdentityCase::SumTwo ? 1 : 2);
    return ex;
}

Polynomial apply_operator(const Polynomial& op, const Polynomial& target)
{
    Polynomial acc(target.nvars());
    for (const auto& [e, c] : op.terms()) {
        Polynomial t = target;
        for (size_t v = 0; v < e.size(); ++v)
            for (int k = 0; k < e[v]; ++k) t = t.derivative(int(v));
        acc += c * t;
    }
    return acc;
}

} // namespace gf
