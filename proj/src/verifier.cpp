#include "gammaforge/verifier.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <future>

namespace gf {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

double ipow_d(double x, long long n)
{
    if (n == 0) return 1.0;
    bool neg = n < 0;
    unsigned long long k = neg ? -(unsigned long long)n : (unsigned long long)n;
    double acc = 1.0, base = x;
    while (k) {
        if (k & 1) acc *= base;
        base *= base;
        k >>= 1;
    }
    return neg ? 1.0 / acc : acc;
}

cdouble cpow_i(cdouble z, long long n)
{
    if (n == 0) return {1.0, 0.0};
    bool neg = n < 0;
    unsigned long long k = neg ? -(unsigned long long)n : (unsigned long long)n;
    cdouble acc{1.0, 0.0}, base = z;
    while (k) {
        if (k & 1) acc *= base;
        base *= base;
        k >>= 1;
    }
    return neg ? 1.0 / acc : acc;
}

double char_pow(const Character& c, double x)
{
    double mag = std::pow(std::abs(x), c.s.to_double());
    return (x < 0 && c.n == 1) ? -mag : mag;
}

} // namespace

ElementaryFunction source_side(const MonomialIdentity& id)
{
    ElementaryFunction g;
    g.field = id.field;
    g.a = id.a.to_double();
    g.exponents = id.exponents;
    g.chars = id.lambda;
    return g;
}

ElementaryFunction target_side(const MonomialIdentity& id)
{
    ElementaryFunction g;
    g.field = id.field;
    g.a = id.b.to_double();
    for (size_t i = 0; i < id.size(); ++i) g.exponents.push_back(id.m(i));
    g.chars = id.eta;
    return g;
}

namespace {

struct BudgetCounter {
    std::atomic<size_t> used{0};
    size_t cap = 0;

    void charge(size_t n)
    {
        if (used.fetch_add(n) + n > cap)
            raise(ErrorCode::ToleranceNotMet, "pairing evaluation budget exhausted");
    }
};

QuadResult pair_real_1d(const ElementaryFunction& G, const TestFunction& phi,
                        const PairingOptions& opt)
{
    long long n = G.exponents[0];
    const Character& ch = G.chars[0];
    double s = ch.s.to_double();
    int ord = vanishing_order(phi, 0);
    double X = opt.box_radius;
    double cutoff = 0.0;
    if (n < 0 || s + ord < 0) {
        double power = ord + s + 1.0;
        cutoff = power > 0.5 ? std::min(0.02, std::pow(0.05 * opt.tol, 1.0 / power)) : 1e-4;
        cutoff = std::max(cutoff, opt.axis_cutoff);
    }

    const double norm = std::pow(2.0 * kPi, -0.5);
    auto f = [&](double x) -> cdouble {
        if (x == 0.0) return {0.0, 0.0};
        double mon = G.a * ipow_d(x, n);
        cdouble osc{std::cos(mon), std::sin(mon)};
        return norm * osc * char_pow(ch, x) * phi.eval({x});
    };
    auto rate = [&](double x) { return std::abs(G.a * double(n) * ipow_d(x, n - 1)); };

    std::vector<double> breaks;
    for (double sign : {-1.0, 1.0}) {
        double lo = cutoff, hi = X;
        auto part = oscillation_breakpoints(lo, hi, [&](double t) { return rate(sign * t); }, 0.5);
        for (double t : part) breaks.push_back(sign * t);
    }
    QuadOptions qo;
    qo.abs_tol = opt.tol;
    qo.max_evals = opt.max_evals;
    return integrate_segments(f, breaks, qo);
}

QuadResult pair_real_2d(const ElementaryFunction& G, const TestFunction& phi,
                        const PairingOptions& opt)
{
    // outer variable: the most singular slot (negative exponent preferred)
    int outer = 0;
    if (G.exponents[1] < 0 && G.exponents[0] >= 0) outer = 1;
    int inner = 1 - outer;
    long long n_out = G.exponents[outer], n_in = G.exponents[inner];
    const Character &ch_out = G.chars[outer], &ch_in = G.chars[inner];
    double s_out = ch_out.s.to_double();
    int ord_out = vanishing_order(phi, outer);

    double X = opt.box_radius;
    double cutoff = 1e-7;
    if (n_out < 0) {
        double power = ord_out + s_out + 1.0;
        if (power <= 0.5)
            cutoff = 1e-4; // divergent-leaning; the budget guard reports failure
        else
            cutoff = std::min(0.02, std::pow(0.05 * opt.tol, 1.0 / power));
    }
    cutoff = std::max(cutoff, opt.axis_cutoff);

    const double norm = std::pow(2.0 * kPi, -1.0);
    auto budget = std::make_shared<BudgetCounter>();
    budget->cap = opt.max_evals;

    double inner_tol = opt.tol / 50.0;
    auto outer_integrand = [&, budget](double y) -> cdouble {
        if (y == 0.0) return {0.0, 0.0};
        double coeff = G.a * ipow_d(y, n_out);
        double cy = char_pow(ch_out, y);
        auto f = [&](double x) -> cdouble {
            if (x == 0.0) return {0.0, 0.0};
            double mon = coeff * ipow_d(x, n_in);
            cdouble osc{std::cos(mon), std::sin(mon)};
            std::vector<double> pt(2);
            pt[outer] = y;
            pt[inner] = x;
            return norm * osc * cy * char_pow(ch_in, x) * phi.eval(pt);
        };
        auto rate = [&](double x) {
            return std::abs(coeff * double(n_in) * ipow_d(x, n_in - 1));
        };
        std::vector<double> breaks;
        double in_cut = n_in < 0 ? 1e-3 : 0.0;
        for (double sign : {-1.0, 1.0}) {
            auto part =
                oscillation_breakpoints(in_cut, X, [&](double t) { return rate(sign * t); }, 0.5);
            for (double t : part) breaks.push_back(sign * t);
        }
        QuadOptions qi;
        qi.abs_tol = inner_tol;
        qi.max_evals = 6'000'000;
        qi.throw_on_budget = false;
        QuadResult r = integrate_segments(f, breaks, qi);
        budget->charge(r.evals);
        return r.value;
    };

    // outer oscillation with an effective inner coordinate of 2
    auto outer_rate = [&](double y) {
        return std::abs(G.a * double(n_out) * ipow_d(y, n_out - 1) * ipow_d(2.0, n_in));
    };
    std::vector<double> breaks;
    for (double sign : {-1.0, 1.0}) {
        auto part = oscillation_breakpoints(cutoff, X, [&](double t) { return outer_rate(sign * t); },
                                            0.35);
        for (double t : part) breaks.push_back(sign * t);
    }
    QuadOptions qo;
    qo.abs_tol = opt.tol;
    qo.max_evals = opt.max_evals;
    QuadResult r = integrate_segments(outer_integrand, breaks, qo);
    r.error += inner_tol * 4.0 * X;
    r.evals += budget->used.load();
    return r;
}

QuadResult pair_complex_1d(const ElementaryFunction& G, const TestFunction& phi,
                           const PairingOptions& opt)
{
    long long n = G.exponents[0];
    const Character& ch = G.chars[0];
    if (n < 0 || ch.s.is_negative())
        raise(ErrorCode::UnsupportedCase,
              "complex-field pairings support nonnegative exponents and characters only");
    double X = opt.box_radius;
    const double norm = std::pow(2.0 * kPi, -1.0);
    auto budget = std::make_shared<BudgetCounter>();
    budget->cap = opt.max_evals;
    double inner_tol = opt.tol / 50.0;

    auto outer_integrand = [&, budget](double u) -> cdouble {
        auto f = [&](double v) -> cdouble {
            cdouble z{u, v};
            if (std::abs(z) < 1e-280) return {0.0, 0.0};
            cdouble mon = cdouble(G.a, 0.0) * cpow_i(z, n);
            double ph = mon.real();
            cdouble osc{std::cos(ph), std::sin(ph)};
            return norm * osc * evaluate(ch, z) * phi.eval({u, v});
        };
        // phase Re(a z^n): d/dv bounded by |a| n |z|^{n-1}
        auto rate = [&](double v) {
            double r = std::hypot(u, v);
            return std::abs(G.a) * double(n) * ipow_d(r, n - 1);
        };
        std::vector<double> breaks;
        for (double sign : {-1.0, 1.0}) {
            auto part = oscillation_breakpoints(0.0, X, [&](double t) { return rate(sign * t); }, 0.5);
            for (double t : part) breaks.push_back(sign * t);
        }
        QuadOptions qi;
        qi.abs_tol = inner_tol;
        qi.max_evals = 6'000'000;
        qi.throw_on_budget = false;
        QuadResult r = integrate_segments(f, breaks, qi);
        budget->charge(r.evals);
        return r.value;
    };
    auto outer_rate = [&](double u) { return std::abs(G.a) * double(n) * ipow_d(std::abs(u) + 1.0, n - 1); };
    std::vector<double> breaks;
    for (double sign : {-1.0, 1.0}) {
        auto part = oscillation_breakpoints(0.0, X, [&](double t) { return outer_rate(sign * t); }, 0.5);
        for (double t : part) breaks.push_back(sign * t);
    }
    QuadOptions qo;
    qo.abs_tol = opt.tol;
    qo.max_evals = opt.max_evals;
    QuadResult r = integrate_segments(outer_integrand, breaks, qo);
    r.error += inner_tol * 4.0 * X;
    r.evals += budget->used.load();
    return r;
}

} // namespace

QuadResult pair_integral(const ElementaryFunction& G, const TestFunction& phi,
                         const PairingOptions& opt)
{
    if (G.field.kind == FieldKind::Real) {
        if (G.exponents.size() == 1) return pair_real_1d(G, phi, opt);
        if (G.exponents.size() == 2) return pair_real_2d(G, phi, opt);
        raise(ErrorCode::UnsupportedCase, "real pairings support k <= 2");
    }
    if (G.field.kind == FieldKind::Complex) {
        if (G.exponents.size() == 1) return pair_complex_1d(G, phi, opt);
        raise(ErrorCode::UnsupportedCase, "complex pairings support k = 1");
    }
    raise(ErrorCode::UnsupportedCase, "archimedean fields only");
}

int verifier_threads()
{
    const char* env = std::getenv("GAMMAFORGE_THREADS");
    if (!env) return 1;
    int t = std::atoi(env);
    return std::max(1, std::min(64, t));
}

VerificationReport verify_identity(const MonomialIdentity& id, int num_tests, double tol,
                                   unsigned long long seed, const VerifierOptions& opt)
{
    VerificationReport rep;
    rep.identity = id;
    rep.seed = seed;
    rep.tol = tol;

    ElementaryFunction g1 = source_side(id);
    ElementaryFunction g2 = target_side(id);

    int real_vars_per_slot = id.field.kind == FieldKind::Complex ? 2 : 1;
    int nv = int(id.size()) * real_vars_per_slot;
    std::vector<int> signs;
    for (size_t i = 0; i < id.size(); ++i) {
        signs.push_back(+1);
        if (real_vars_per_slot == 2) signs.push_back(-1);
    }
    std::vector<int> P(nv, id.field.kind == FieldKind::Complex ? 0 : 1);
    std::vector<int> R = P;

    auto run_one = [&](int j) -> PairingRecord {
        TestFunction phi =
            make_test_function(P, R, opt.test_order, seed + 7919ull * (unsigned)j, signs);
        TestFunction phi_hat = fourier_transform(phi);

        // scale pass on the target side, then a refined pass on both sides
        PairingOptions rough = opt.pairing;
        rough.tol = std::max(1e-6, tol * 0.05);
        QuadResult right0 = pair_integral(g2, phi, rough);
        double scale = std::max(1e-12, std::abs(right0.value));

        PairingOptions fine = opt.pairing;
        fine.tol = std::max(1e-13, 0.05 * tol * scale);
        QuadResult right = pair_integral(g2, phi, fine);
        QuadResult left = pair_integral(g1, phi_hat, fine);

        PairingRecord pr;
        pr.test_desc = phi.desc;
        pr.left = left.value;
        pr.right = right.value;
        pr.err_left = left.error;
        pr.err_right = right.error;
        pr.ratio = left.value / right.value;
        return pr;
    };

    int threads = std::min(opt.threads > 0 ? opt.threads : verifier_threads(), num_tests);
    rep.tests.resize(num_tests);
    if (threads <= 1) {
        for (int j = 0; j < num_tests; ++j) rep.tests[j] = run_one(j);
    } else {
        std::vector<std::future<PairingRecord>> futs;
        for (int j = 0; j < num_tests; ++j)
            futs.push_back(std::async(std::launch::async, run_one, j));
        for (int j = 0; j < num_tests; ++j) rep.tests[j] = futs[j].get();
    }

    rep.fitted_C = id.C ? *id.C : rep.tests.front().ratio;
    double dev = 0.0, qerr = 0.0;
    for (const auto& t : rep.tests) {
        dev = std::max(dev, std::abs(t.ratio - rep.fitted_C) / std::abs(rep.fitted_C));
        double scale = std::max(std::abs(t.right), 1e-300);
        qerr = std::max(qerr, std::max(t.err_left, t.err_right) / scale);
    }
    rep.max_rel_dev = dev;
    rep.max_quad_err = qerr;
    rep.pass = dev < tol && qerr < tol / 10.0;
    return rep;
}

nlohmann::json report_to_json(const VerificationReport& rep)
{
    nlohmann::json j;
    j["schema"] = "1";
    j["identity"] = identity_to_json(rep.identity);
    j["seed"] = rep.seed;
    j["tol"] = format_double_15(rep.tol);
    j["tests"] = nlohmann::json::array();
    for (const auto& t : rep.tests) {
        nlohmann::json tj;
        tj["testfn"] = t.test_desc;
        tj["left"] = complex_to_json(t.left);
        tj["right"] = complex_to_json(t.right);
        tj["ratio"] = complex_to_json(t.ratio);
        tj["quad_error"] = format_double_15(std::max(t.err_left, t.err_right));
        j["tests"].push_back(tj);
    }
    j["fitted_C"] = complex_to_json(rep.fitted_C);
    j["max_rel_dev"] = format_double_15(rep.max_rel_dev);
    j["max_quad_err"] = format_double_15(rep.max_quad_err);
    j["pass"] = rep.pass;
    return j;
}

cdouble fresnel_gauss_moment(double a, int m)
{
    if (m % 2 == 1) return {0.0, 0.0};
    cdouble c{1.0, -2.0 * a}; // exp(-c x^2 / 2) with c = 1 - 2ia
    double dfac = 1.0;
    for (int k = m - 1; k >= 2; k -= 2) dfac *= k;
    return dfac * std::pow(c, -0.5 * (m + 1));
}

cdouble fresnel_pair_oracle(double a, const CPoly& poly)
{
    cdouble acc{0.0, 0.0};
    for (const auto& [e, c] : poly.re.terms()) acc += c.to_double() * fresnel_gauss_moment(a, e[0]);
    for (const auto& [e, c] : poly.im.terms())
        acc += cdouble(0.0, c.to_double()) * fresnel_gauss_moment(a, e[0]);
    return acc;
}

} // namespace gf
