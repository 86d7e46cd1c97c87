#include "gammaforge/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

namespace gf {

namespace {

// 15-point Kronrod nodes on [-1,1] (odd indices are the embedded 7-point Gauss rule)
constexpr double kXgk[15] = {
    -0.991455371120812639206854697526329, -0.949107912342758524526189684047851,
    -0.864864423359769072789712788640926, -0.741531185599394439863864773280788,
    -0.586087235467691130294144838258730, -0.405845151377397166906606412076961,
    -0.207784955007898467600689403773245, 0.0,
    0.207784955007898467600689403773245,  0.405845151377397166906606412076961,
    0.586087235467691130294144838258730,  0.741531185599394439863864773280788,
    0.864864423359769072789712788640926,  0.949107912342758524526189684047851,
    0.991455371120812639206854697526329};

constexpr double kWgk[15] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714,
    0.204432940075298892414161999234649, 0.190350578064785409913256402421014,
    0.169004726639267902826583426598550, 0.140653259715525918745189590510238,
    0.104790010322250183839876322541518, 0.063092092629978553290700663189204,
    0.022935322010529224963732008058970};

constexpr double kWg[7] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327,
    0.381830050505118944950369775488975, 0.279705391489276667901467771423780,
    0.129484966168869693270611432679082};

struct Segment {
    double a, b;
    std::complex<double> value;
    double error;

    bool operator<(const Segment& o) const { return error < o.error; }
};

Segment evaluate_segment(const std::function<std::complex<double>(double)>& f, double a, double b)
{
    double c = 0.5 * (a + b), h = 0.5 * (b - a);
    std::complex<double> k15{0.0, 0.0}, g7{0.0, 0.0};
    for (int i = 0; i < 15; ++i) {
        std::complex<double> v = f(c + h * kXgk[i]);
        k15 += kWgk[i] * v;
        if (i % 2 == 1) g7 += kWg[i / 2] * v;
    }
    k15 *= h;
    g7 *= h;
    double err = std::abs(k15 - g7);
    err = std::max(err, 5e-17 * std::abs(k15));
    return {a, b, k15, err};
}

} // namespace

QuadResult integrate_segments(const std::function<std::complex<double>(double)>& f,
                              std::vector<double> breakpoints, const QuadOptions& opt)
{
    std::sort(breakpoints.begin(), breakpoints.end());
    breakpoints.erase(std::unique(breakpoints.begin(), breakpoints.end()), breakpoints.end());
    if (breakpoints.size() < 2) return {};

    std::priority_queue<Segment> queue;
    QuadResult out;
    std::complex<double> total{0.0, 0.0};
    double total_err = 0.0;
    for (size_t i = 0; i + 1 < breakpoints.size(); ++i) {
        Segment s = evaluate_segment(f, breakpoints[i], breakpoints[i + 1]);
        out.evals += 15;
        total += s.value;
        total_err += s.error;
        queue.push(s);
    }
    while (total_err > opt.abs_tol && !queue.empty()) {
        if (out.evals + 30 > opt.max_evals) {
            if (opt.throw_on_budget)
                raise(ErrorCode::ToleranceNotMet,
                      "quadrature budget exhausted before reaching tolerance");
            break;
        }
        Segment worst = queue.top();
        queue.pop();
        if (worst.b - worst.a < 1e-15 * (std::abs(worst.a) + 1.0)) {
            // cannot refine further; accept its error
            continue;
        }
        total -= worst.value;
        total_err -= worst.error;
        double mid = 0.5 * (worst.a + worst.b);
        for (Segment s : {evaluate_segment(f, worst.a, mid), evaluate_segment(f, mid, worst.b)}) {
            out.evals += 15;
            total += s.value;
            total_err += s.error;
            queue.push(s);
        }
    }
    out.value = total;
    out.error = total_err;
    return out;
}

std::vector<double> oscillation_breakpoints(double a, double b,
                                            const std::function<double(double)>& phase_derivative,
                                            double max_width)
{
    if (!(b > a)) return {a, b};
    // sample the phase rate, accumulate, and place panels at equal phase
    // increments (capped, the adaptive pass refines what matters)
    constexpr int kSamples = 256;
    constexpr int kMaxPanels = 512;
    const double half_pi = 1.5707963267948966;
    double h = (b - a) / kSamples;
    std::vector<double> cum(kSamples + 1, 0.0);
    double prev = std::abs(phase_derivative(a));
    for (int i = 1; i <= kSamples; ++i) {
        double x = a + h * i;
        double r = std::abs(phase_derivative(x));
        cum[i] = cum[i - 1] + 0.5 * (prev + r) * h;
        prev = r;
    }
    double total = cum[kSamples];
    double dphi = std::max(half_pi, total / kMaxPanels);

    std::vector<double> pts{a};
    double next_phase = dphi;
    double last = a;
    for (int i = 1; i <= kSamples; ++i) {
        double x = a + h * i;
        while (x - last > max_width) {
            last += max_width;
            pts.push_back(last);
        }
        if (cum[i] >= next_phase) {
            pts.push_back(x);
            last = x;
            next_phase = cum[i] + dphi;
        }
    }
    if (pts.back() < b) pts.push_back(b);
    return pts;
}

} // namespace gf
