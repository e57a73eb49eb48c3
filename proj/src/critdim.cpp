// critdim.cpp

#include "lanelab/critdim.hpp"

#include <cmath>

#include "lanelab/errors.hpp"

namespace lanelab::critdim {

ThresholdValues threshold_functions(double N, const SystemParams& params) {
    const DerivedParams d = derive(params);
    const double p = params.p, b = params.beta;
    const double lu = d.decay_u, lv = d.decay_v;
    ThresholdValues t;
    t.source = p * lu * (lv + 2.0) * (N - 2.0 - lu) * (N - 4.0 - lv);
    t.source_grad = p * (lv + 2.0) * (N - 4.0 - lv) + p * lu * (N - 2.0 - lu);
    t.hardy = (N + b) * (N + b) * (N - 4.0 - b) * (N - 4.0 - b) / 16.0;
    t.hardy_grad = (N + b) * (N - 4.0 - b) / 2.0;
    t.source_dN = p * lu * (2.0 + lv) * (2.0 * N - 6.0 - b - 2.0 * lu);
    t.hardy_dN = 0.25 * (N + b) * (N - 2.0) * (N - 4.0 - b);
    return t;
}

EndpointGaps endpoint_gaps(const SystemParams& params) {
    const DerivedParams d = derive(params);
    const double p = params.p, b = params.beta, lu = d.decay_u;
    EndpointGaps g;
    g.left_gap = (p - 1.0) * lu * lu * (2.0 + b + lu) * (2.0 + b + lu);
    g.right_gap_formula =
        4.0 * p * p * lu * lu * (2.0 + b + lu) * (2.0 + b + 4.0 * p * lu) -
        (4.0 * p + 1.0) * (4.0 * p + 1.0) * lu * lu / 16.0 *
            std::pow((4.0 + 2.0 * b) + (4.0 * p + 1.0) * lu, 2);
    g.grad_gap = 2.0 * (p - 1.0) * lu * (2.0 + b + lu);
    g.deriv_gap = (p - 1.0) * lu * (2.0 + b + lu) * (2.0 + b + 2.0 * lu);
    return g;
}

CritDimResult critical_dimension(const SystemParams& params, double rel_tol) {
    if (!(rel_tol > 0.0 && rel_tol <= 1e-3))
        throw ParameterError("critical_dimension: rel_tol must lie in (0, 1e-3]");
    const DerivedParams d = derive(params);
    CritDimResult res;
    res.bracket_lo = d.hyperbola_dim;
    res.bracket_hi = d.bracket_hi;

    auto gap = [&](double N) {
        const ThresholdValues t = threshold_functions(N, params);
        return t.source - t.hardy;
    };
    res.gap_lo = gap(res.bracket_lo);
    res.gap_hi = gap(res.bracket_hi);
    if (!(res.gap_lo > 0.0) || !(res.gap_hi < 0.0))
        throw BracketError("critical_dimension: endpoint gaps have wrong signs");

    const int n_scan = 4096;
    res.scan_points = n_scan;
    const double step = (res.bracket_hi - res.bracket_lo) / (n_scan - 1);
    double lo = 0.0, hi = 0.0;
    bool found = false;
    double prev_x = res.bracket_lo, prev_v = res.gap_lo;
    for (int i = 1; i < n_scan; ++i) {
        const double x = res.bracket_lo + i * step;
        const double v = (i == n_scan - 1) ? res.gap_hi : gap(x);
        if (prev_v > 0.0 && v <= 0.0) {
            lo = prev_x;
            hi = x;
            found = true;
            break;
        }
        prev_x = x;
        prev_v = v;
    }
    if (!found) throw NoRootError("critical_dimension: no sign change in the bracket");

    int iters = 0;
    while (hi - lo > rel_tol * 0.5 * (lo + hi) && iters < 200) {
        const double mid = 0.5 * (lo + hi);
        if (gap(mid) > 0.0)
            lo = mid;
        else
            hi = mid;
        ++iters;
    }
    res.bisections = iters;
    res.root = 0.5 * (lo + hi);

    const LiteratureBounds lb = literature_bounds(params);
    res.cowan = lb.cowan;
    res.fazly = lb.fazly;
    return res;
}

LiteratureBounds literature_bounds(const SystemParams& params) {
    LiteratureBounds lb;
    const double p = params.p;
    if (params.alpha == 0.0 && params.beta == 0.0) {
        const double t = 2.0 * p / (p + 1.0);
        lb.cowan = 2.0 + 4.0 * (p + 1.0) / (p - 1.0) * (std::sqrt(t) + std::sqrt(t - std::sqrt(t)));
    }
    if (params.alpha == params.beta)
        lb.fazly = 8.0 + 3.0 * params.alpha + (8.0 + 4.0 * params.alpha) / (p - 1.0);
    return lb;
}

double printed_quartic_gap(const SystemParams& params, double y) {
    const double p = params.p, a = params.alpha, b = params.beta;
    const double p2 = p * p, p3 = p2 * p, p4 = p3 * p;
    const double pm1_2 = (p - 1.0) * (p - 1.0);
    const double pm1_4 = pm1_2 * pm1_2;

    const double c4 = p4 - 4.0 * p3 + 6.0 * p2 - 4.0 * p + 1.0;
    const double c3 = -(8.0 * p4 - 32.0 * p3 + 48.0 * p2 - 32.0 * p + 8.0);
    const double c2 =
        -(p2 - 2.0 * p + 1.0) *
        ((32.0 * a + 104.0 * b + 16.0 * a * b + 18.0 * b * b + 112.0) * p2 +
         (16.0 * a * b + 16.0 * a * a - 4.0 * b * b + 16.0 * b + 96.0 * a + 160.0) * p +
         8.0 * b + 2.0 * b * b - 16.0);
    const double c1 =
        ((48.0 + 44.0 * b + 12.0 * b * b + 8.0 * a * b + 12.0 * a + a * b * b + b * b * b) * p2 +
         (64.0 + 56.0 * a + 28.0 * a * b + 10.0 * a * a + 40.0 * b + 10.0 * b * b +
          4.0 * a * b * b + 3.0 * a * a * b + b * b * b) *
             p +
         28.0 * a + 16.0 + 14.0 * a * a + 2.0 * a * a * a + 12.0 * b + 12.0 * a * b +
         3.0 * a * a * b + 2.0 * b * b + a * b * b) *
            16.0 * (p2 - p) -
        pm1_4 * (32.0 * b + 8.0 * b * b);
    const double c0 =
        pm1_4 * b * b * (b + 4.0) * (b + 4.0) -
        16.0 *
            ((8.0 + (2.0 + b) * a + (6.0 + b) * b) * p + (6.0 + a + b) * a + 2.0 * b + 8.0) *
            ((8.0 + 2.0 * b) * p2 + (6.0 * b + 6.0 * a + a * b + b * b + 8.0) * p + 2.0 * a +
             a * a + a * b) *
            p;

    const double printed = (((c4 * y + c3) * y + c2) * y + c1) * y + c0;
    const ThresholdValues t = threshold_functions(y, params);
    return printed - 16.0 * pm1_4 * (t.hardy - t.source);
}

}  // namespace lanelab::critdim
