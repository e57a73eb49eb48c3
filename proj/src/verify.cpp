// verify.cpp -- acceptance criteria and module invariants, each as one
// named pass/fail check with a one-line measurement summary.

#include "lanelab/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>

#include "lanelab/cli.hpp"
#include "lanelab/critdim.hpp"
#include "lanelab/csvio.hpp"
#include "lanelab/errors.hpp"
#include "lanelab/fields.hpp"
#include "lanelab/functionals.hpp"
#include "lanelab/identities.hpp"
#include "lanelab/params.hpp"
#include "lanelab/quadrature.hpp"
#include "lanelab/zonal.hpp"

namespace lanelab::verify {

namespace {

using fields::Field;
using fields::RadialGrid;

std::string fmt(double x) {
    std::ostringstream ss;
    ss.precision(3);
    ss << std::scientific << x;
    return ss.str();
}

double rel_diff(double a, double b) {
    return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1.0});
}

SystemParams sample_params(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> up(1.25, 9.0), ua(-3.5, 4.0), un(5.0, 40.0);
    for (;;) {
        const double N = un(rng);
        const double bmax = std::min(4.0, 0.5 * (N - 4.0));
        std::uniform_real_distribution<double> ub(0.0, bmax);
        try {
            return SystemParams::make(N, up(rng), ua(rng), ub(rng));
        } catch (const ValidationError&) {
        }
    }
}

SystemParams sample_gamma_positive(std::mt19937_64& rng) {
    for (;;) {
        const SystemParams P = sample_params(rng);
        const DerivedParams d = derive(P);
        if (P.N - 2.0 - d.decay_u > 0.0 && P.N - 4.0 - d.decay_v > 0.0) return P;
    }
}

SystemParams sample_window(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> up(1.3, 8.0), ua(-1.0, 3.0), ub(0.0, 2.5);
    std::uniform_real_distribution<double> ut(0.05, 0.95);
    for (;;) {
        const double p = up(rng), a = ua(rng), b = ub(rng);
        const SystemParams ref = SystemParams::make(std::max(5.0, 4.0 + 2.0 * b) + 1.0, p, a, b);
        critdim::CritDimResult cd;
        try {
            cd = critdim::critical_dimension(ref);
        } catch (const Error&) {
            continue;
        }
        const double N = cd.bracket_lo + ut(rng) * (cd.root - cd.bracket_lo);
        if (N <= cd.bracket_lo + 1e-6 || N >= cd.root - 1e-6) continue;
        try {
            return SystemParams::make(N, p, a, b);
        } catch (const ValidationError&) {
        }
    }
}

// Homogeneity-windowed test profile: r^{-(N-4-beta)/2} tapered by a C^2
// plateau of ln r; decisively violates the stability inequality below the
// Hardy-Rellich threshold.  Support [exp(-L-1), exp(L+1)] around r=1.
Field plateau_zeta(const SystemParams& P, const RadialGrid& grid, double L) {
    auto step = [](double x) { return ((6.0 * x - 15.0) * x + 10.0) * x * x * x; };
    auto step1 = [](double x) { return ((30.0 * x - 60.0) * x + 30.0) * x * x; };
    auto step2 = [](double x) { return ((120.0 * x - 180.0) * x + 60.0) * x; };
    const double m = -0.5 * (P.N - 4.0 - P.beta);
    Field zeta;
    zeta.params = P;
    zeta.grid = grid;
    zeta.derivatives_analytic = true;
    fields::ZonalMode mode;
    mode.degree = 0;
    const std::size_t n = grid.size();
    mode.f.assign(n, 0.0);
    mode.fp.assign(n, 0.0);
    mode.fpp.assign(n, 0.0);
    mode.fppp.assign(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        const double r = grid.r[i];
        const double s = std::log(r);
        const double a = std::abs(s);
        double ph = 0.0, ph1 = 0.0, ph2 = 0.0;
        if (a <= L) {
            ph = 1.0;
        } else if (a < L + 1.0) {
            const double x = L + 1.0 - a;
            const double sg = (s >= 0.0) ? 1.0 : -1.0;
            ph = step(x);
            ph1 = -sg * step1(x);
            ph2 = step2(x);
        }
        if (ph == 0.0) continue;
        const double rm = std::pow(r, m);
        mode.f[i] = rm * ph;
        mode.fp[i] = std::pow(r, m - 1.0) * (m * ph + ph1);
        mode.fpp[i] = std::pow(r, m - 2.0) * (m * (m - 1.0) * ph + (2.0 * m - 1.0) * ph1 + ph2);
        // third derivative left zero; the stability form never uses it
    }
    zeta.modes.push_back(std::move(mode));
    return zeta;
}

struct Ctx {
    bool quick;
    std::vector<CheckResult> out;
    void check(const std::string& name, bool pass, const std::string& detail) {
        out.push_back({name, pass, detail});
    }
    void run(const std::string& name, const std::function<void(Ctx&)>& body) {
        try {
            body(*this);
        } catch (const std::exception& e) {
            out.push_back({name, false, std::string("exception: ") + e.what()});
        }
    }
};

// ----------------------------------------------------------------- checks

void check_params_identities(Ctx& ctx) {
    std::mt19937_64 rng(11);
    const int count = ctx.quick ? 200 : 1000;
    double worst_delta = 0.0, worst_mu = 0.0, worst_c = 1e300;
    int sign_checked = 0;
    bool sign_ok = true;
    for (int i = 0; i < count; ++i) {
        const SystemParams P = sample_params(rng);
        const DerivedParams d = derive(P);
        worst_delta = std::max(worst_delta,
                               rel_diff(d.energy_exp, 2.0 * d.decay_u + 4.0 + P.beta - P.N));
        worst_mu = std::max(worst_mu, rel_diff(d.decay_v, d.decay_u + P.beta));
        const double lhs = P.p - (P.N + 4.0 + 2.0 * P.alpha + P.beta) / (P.N - 4.0 - P.beta);
        const double rhs = P.N - d.hyperbola_dim;
        if (std::abs(lhs) > 1e-10 && std::abs(rhs) > 1e-10) {
            ++sign_checked;
            if ((lhs > 0.0) != (rhs > 0.0)) sign_ok = false;
        }
        if (P.N >= d.hyperbola_dim) worst_c = std::min(worst_c, d.drift_const);
    }
    ctx.check("params.derived_identities", worst_delta <= 1e-14 && worst_mu <= 1e-14,
              "max rel err: energy_exp " + fmt(worst_delta) + ", decay_v " + fmt(worst_mu));
    ctx.check("params.hyperbola_equivalence", sign_ok,
              std::to_string(sign_checked) + " decisive samples, signs agree");
    ctx.check("params.drift_const_positive", worst_c > 0.0,
              "min drift_const above hyperbola " + fmt(worst_c));
}

void check_endpoint_gaps(Ctx& ctx) {  // acceptance 1
    std::mt19937_64 rng(12);
    const int count = ctx.quick ? 50 : 200;
    double worst = 0.0;
    for (int i = 0; i < count; ++i) {
        const SystemParams P = sample_params(rng);
        const DerivedParams d = derive(P);
        const critdim::EndpointGaps g = critdim::endpoint_gaps(P);
        const critdim::ThresholdValues lo = critdim::threshold_functions(d.hyperbola_dim, P);
        const critdim::ThresholdValues hi = critdim::threshold_functions(d.bracket_hi, P);
        worst = std::max(worst, rel_diff(lo.source - lo.hardy, g.left_gap));
        worst = std::max(worst, rel_diff(hi.source - hi.hardy, g.right_gap_formula));
        worst = std::max(worst, rel_diff(lo.source_grad - lo.hardy_grad, g.grad_gap));
        worst = std::max(worst, rel_diff(lo.source_dN - lo.hardy_dN, g.deriv_gap));
    }
    ctx.check("critdim.endpoint_gap_identities", worst <= 1e-10,
              std::to_string(count) + " samples, max rel err " + fmt(worst));
}

void check_threshold_relations(Ctx& ctx) {
    std::mt19937_64 rng(13);
    const int count = ctx.quick ? 50 : 200;
    double worst_fg = 0.0, worst_pg = 0.0, worst_q = 0.0;
    for (int i = 0; i < count; ++i) {
        const SystemParams P = sample_params(rng);
        std::uniform_real_distribution<double> un(5.0, 60.0);
        const double N = un(rng);
        const critdim::ThresholdValues t = critdim::threshold_functions(N, P);
        worst_fg = std::max(worst_fg, rel_diff(t.hardy, 0.25 * t.hardy_grad * t.hardy_grad));
        const SystemParams PN = SystemParams::make(std::max(N, 5.0 + 2.0 * P.beta),
                                                   P.p, P.alpha, P.beta);
        const critdim::ThresholdValues tN = critdim::threshold_functions(PN.N, PN);
        worst_pg = std::max(worst_pg,
                            rel_diff(tN.source, PN.p * derive(PN).singular_coef));
        // published quartic: gap equals -16 b (b+4) (p-1)^4 y exactly
        const double y = un(rng);
        const double gap = critdim::printed_quartic_gap(P, y);
        const double expected = -16.0 * P.beta * (P.beta + 4.0) * std::pow(P.p - 1.0, 4.0) * y;
        // the gap is a difference of quartic-sized quantities; scale accordingly
        const critdim::ThresholdValues ty = critdim::threshold_functions(y, P);
        const double qscale = 16.0 * std::pow(P.p - 1.0, 4.0) *
                                  (std::abs(ty.hardy) + std::abs(ty.source)) +
                              1.0;
        worst_q = std::max(worst_q, std::abs(gap - expected) / qscale);
    }
    ctx.check("critdim.hardy_is_squared_gradient", worst_fg <= 1e-14,
              "max rel err " + fmt(worst_fg));
    ctx.check("critdim.source_equals_p_singular_coef", worst_pg <= 1e-14,
              "max rel err " + fmt(worst_pg));
    ctx.check("critdim.printed_quartic_gap_form", worst_q <= 1e-10,
              "gap matches -16 b(b+4)(p-1)^4 y, max rel err " + fmt(worst_q));
}

void check_critical_dimension(Ctx& ctx) {  // acceptance 2
    const SystemParams P = SystemParams::make(12, 3, 0, 0);
    const critdim::CritDimResult cd = critdim::critical_dimension(P);
    // independent oracle: least root of the reduced cubic on (8,30)
    auto cubic = [](double N) { return ((N - 4.0) * N - 384.0) * N + 2304.0; };
    double lo = 8.0, hi = 30.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (cubic(mid) < 0.0)
            lo = mid;
        else
            hi = mid;
    }
    const double oracle = 0.5 * (lo + hi);
    const bool near_oracle = std::abs(cd.root - oracle) <= 1e-8;
    const bool in_window = std::abs(cd.root - 18.16) <= 0.05;
    ctx.check("critdim.root_oracle",
              near_oracle && in_window && cd.bracket_lo == 8.0 && cd.bracket_hi == 30.0,
              "root " + fmt(cd.root) + " vs cubic oracle " + fmt(oracle));

    bool signs_ok = true;
    std::string fail;
    for (double p : {2.0, 3.0, 5.0, 9.0})
        for (double a : {0.0, 1.0, 2.0})
            for (double b : {0.0, 1.0, 2.0}) {
                const SystemParams Q =
                    SystemParams::make(std::max(5.0, 4.0 + 2.0 * b), p, a, b);
                try {
                    const critdim::CritDimResult r = critdim::critical_dimension(Q);
                    if (!(r.gap_lo > 0.0 && r.gap_hi < 0.0)) signs_ok = false;
                } catch (const Error& e) {
                    signs_ok = false;
                    fail = e.what();
                }
            }
    ctx.check("critdim.bracket_signs_grid", signs_ok,
              signs_ok ? "36 tuples, gap_lo > 0 > gap_hi" : fail);
}

void check_interior_inequalities(Ctx& ctx) {
    std::mt19937_64 rng(14);
    const int count = ctx.quick ? 20 : 60;
    bool ok = true;
    for (int i = 0; i < count && ok; ++i) {
        const SystemParams P = sample_params(rng);
        critdim::CritDimResult cd;
        try {
            cd = critdim::critical_dimension(P);
        } catch (const Error&) {
            continue;
        }
        for (int j = 1; j <= 64; ++j) {
            const double N = cd.bracket_lo + (cd.root - cd.bracket_lo) * j / 65.0;
            const critdim::ThresholdValues t = critdim::threshold_functions(N, P);
            if (!(t.source > t.hardy && t.source_grad > t.hardy_grad)) ok = false;
        }
    }
    ctx.check("critdim.window_inequalities", ok,
              "source > hardy and source_grad > hardy_grad on 64 interior points");
}

void check_literature_bounds(Ctx& ctx) {  // acceptance 3
    bool ok = true;
    double min_margin = 1e300;
    for (double p : {2.0, 3.0, 5.0, 9.0}) {
        const SystemParams P0 = SystemParams::make(12, p, 0, 0);
        const critdim::CritDimResult c0 = critdim::critical_dimension(P0);
        if (!c0.cowan) {
            ok = false;
            continue;
        }
        min_margin = std::min(min_margin, c0.root - *c0.cowan);
        for (double a : {0.0, 1.0, 2.0}) {
            const SystemParams P =
                SystemParams::make(std::max(5.0, 4.0 + 2.0 * a), p, a, a);
            const critdim::CritDimResult c = critdim::critical_dimension(P);
            if (!c.fazly) {
                ok = false;
                continue;
            }
            min_margin = std::min(min_margin, c.root - *c.fazly);
        }
    }
    ctx.check("critdim.exceeds_published_bounds", ok && min_margin > 1e-6,
              "min margin " + fmt(min_margin));
    const critdim::LiteratureBounds lb =
        critdim::literature_bounds(SystemParams::make(12, 3, 0, 1));
    ctx.check("critdim.bounds_absent_when_inapplicable", !lb.cowan && !lb.fazly,
              "alpha=0, beta=1: both bounds absent");
}

void check_singular_solution(Ctx& ctx) {  // acceptance 4
    std::mt19937_64 rng(15);
    const int count = ctx.quick ? 5 : 20;
    double worst_pde = 0.0, worst_fg = 0.0;
    for (int i = 0; i < count; ++i) {
        const SystemParams P = sample_gamma_positive(rng);
        const RadialGrid grid = fields::log_grid(1e-2, 1e2, 512);
        const Field u = fields::singular_field(P, grid);
        const Field v = fields::companion_v(u);
        const double psi0 = 1.0 / std::sqrt(quad::sphere_area(P.N));
        const auto& mu = u.modes[0];
        const auto& mv = v.modes[0];
        for (std::size_t j = 0; j < grid.size(); ++j) {
            const double r = grid.r[j];
            // -Lap u = r^beta v
            const double lap_u = mu.fpp[j] + (P.N - 1.0) / r * mu.fp[j];
            const double rhs1 = std::pow(r, P.beta) * mv.f[j];
            worst_pde = std::max(worst_pde, rel_diff(-lap_u, rhs1));
            // -Lap v = r^alpha |u|^{p-1} u   (pointwise values carry psi0)
            const double lap_v = (mv.fpp[j] + (P.N - 1.0) / r * mv.fp[j]) * psi0;
            const double upt = mu.f[j] * psi0;
            const double rhs2 =
                std::pow(r, P.alpha) * std::pow(std::abs(upt), P.p - 1.0) * upt;
            worst_pde = std::max(worst_pde, rel_diff(-lap_v, rhs2));
        }
        const critdim::ThresholdValues t = critdim::threshold_functions(P.N, P);
        worst_fg = std::max(worst_fg, rel_diff(t.source, P.p * derive(P).singular_coef));
    }
    ctx.check("fields.singular_pde_residual", worst_pde <= 1e-10,
              std::to_string(count) + " params x 512 nodes, max rel residual " + fmt(worst_pde));
    ctx.check("fields.source_matches_singular_coef", worst_fg <= 1e-14,
              "max rel err " + fmt(worst_fg));

    // stability classification flips across the critical dimension
    auto stable = [](double N) {
        const SystemParams P = SystemParams::make(N, 3, 0, 0);
        const critdim::ThresholdValues t = critdim::threshold_functions(N, P);
        return t.source <= t.hardy;
    };
    const SystemParams P12 = SystemParams::make(12, 3, 0, 0);
    const critdim::ThresholdValues t12 = critdim::threshold_functions(12.0, P12);
    const critdim::ThresholdValues t19 =
        critdim::threshold_functions(19.0, SystemParams::make(19, 3, 0, 0));
    const critdim::CritDimResult cd = critdim::critical_dimension(P12);
    const bool values_ok = rel_diff(t12.source, 1152.0) <= 1e-12 &&
                           rel_diff(t12.hardy, 576.0) <= 1e-12 &&
                           rel_diff(t19.source, 4680.0) <= 1e-12 &&
                           rel_diff(t19.hardy, 5076.5625) <= 1e-12;
    const bool flip_ok = !stable(12.0) && stable(19.0) && !stable(cd.root - 0.05) &&
                         stable(cd.root + 0.05);
    ctx.check("critdim.stability_classification_flip", values_ok && flip_ok,
              "unstable at N=12 (1152 > 576), stable at N=19 (4680 <= 5076.5625), flip at root");
}

void check_monotonicity_constancy(Ctx& ctx) {  // acceptance 5
    const SystemParams P = SystemParams::make(12, 3, 0, 0);
    const int n = ctx.quick ? 800 : 2000;
    const RadialGrid grid = fields::log_grid(0.5, 2.0, n);
    const Field u = fields::singular_field(P, grid);
    std::vector<double> radii;
    for (std::size_t i = 4; i + 4 < grid.size(); ++i) radii.push_back(grid.r[i]);
    const functionals::MonotonicityReport rep = functionals::monotonicity_curve(u, radii);
    // reference at the node closest to r = 1
    std::size_t ref = 0;
    for (std::size_t i = 1; i < radii.size(); ++i)
        if (std::abs(radii[i] - 1.0) < std::abs(radii[ref] - 1.0)) ref = i;
    double worst = 0.0, worst_term = 0.0, worst_bound = 0.0;
    for (std::size_t i = 0; i < radii.size(); ++i) {
        worst = std::max(worst, std::abs(rep.M[i] - rep.M[ref]));
        double sum = 0.0;
        for (int t = 0; t < 7; ++t) sum += rep.terms[t][i];
        worst_term = std::max(worst_term, rel_diff(sum, rep.M[i]));
        worst_bound = std::max(worst_bound, std::abs(rep.rhs_bound[i]));
    }
    const double tol = 1e-6 * (1.0 + std::abs(rep.M[ref]));
    ctx.check("functionals.monotonicity_constant_on_singular", worst <= tol,
              "max |M - M(1)| " + fmt(worst) + " vs tol " + fmt(tol) + ", M(1) " +
                  fmt(rep.M[ref]));
    ctx.check("functionals.term_breakdown_sums", worst_term <= 1e-12,
              "max rel err " + fmt(worst_term));
    ctx.check("functionals.homogeneous_rhs_bound_vanishes", worst_bound <= 1e-10,
              "max |rhs bound| " + fmt(worst_bound));
}

void check_scaling_invariance(Ctx& ctx) {  // acceptance 5b
    const SystemParams P = SystemParams::make(12, 3, 0, 0);
    double worst = 0.0;
    {
        const RadialGrid grid = fields::log_grid(0.5, 2.0, ctx.quick ? 400 : 800);
        const Field u = fields::singular_field(P, grid);
        for (double kappa : {0.5, 2.0}) {
            const std::size_t i = grid.size() / 2;
            const double r = grid.r[i] / kappa;
            const double gap = functionals::scaling_gap(u, kappa, r);
            const functionals::MonotonicityReport rep =
                functionals::monotonicity_curve(u, {grid.r[i]});
            worst = std::max(worst, gap / (1.0 + std::abs(rep.M[0])));
        }
    }
    {
        const RadialGrid grid = fields::log_grid(0.05, 20.0, ctx.quick ? 600 : 1200);
        const Field bump = fields::bump_field(
            {{0, 1.0, 1.0, 0.5}, {2, 0.7, 1.5, 0.6}}, P, grid);
        for (double kappa : {0.5, 2.0}) {
            const std::size_t i = grid.size() / 2;
            const double r = grid.r[i] / kappa;
            const double gap = functionals::scaling_gap(bump, kappa, r);
            const functionals::MonotonicityReport rep =
                functionals::monotonicity_curve(bump, {grid.r[i]});
            worst = std::max(worst, gap / (1.0 + std::abs(rep.M[0])));
        }
    }
    {
        const RadialGrid grid = fields::log_grid(0.01, 5.0, ctx.quick ? 400 : 800);
        const Field shot = fields::shoot(P, 1.0, 0.1, grid).field;
        for (double kappa : {0.5, 2.0}) {
            const std::size_t i = shot.grid.size() / 2;
            const double r = shot.grid.r[i] / kappa;
            const double gap = functionals::scaling_gap(shot, kappa, r);
            const functionals::MonotonicityReport rep =
                functionals::monotonicity_curve(shot, {shot.grid.r[i]});
            worst = std::max(worst, gap / (1.0 + std::abs(rep.M[0])));
        }
    }
    ctx.check("functionals.scaling_invariance", worst <= 1e-8,
              "max normalized gap " + fmt(worst) +
                  " for kappa in {1/2, 2} on singular, bump, and shot fields");
}

void check_shot_monotonicity(Ctx& ctx) {  // acceptance 6
    const SystemParams P = SystemParams::make(12, 3, 0, 0);
    const DerivedParams d = derive(P);
    const RadialGrid grid = fields::log_grid(0.01, 20.0, ctx.quick ? 700 : 1600);
    const fields::ShootingResult shot = fields::shoot(P, 1.0, 0.1, grid);
    const Field& u = shot.field;
    const double upper = 0.9 * shot.termination_radius;
    std::vector<double> radii;
    for (std::size_t i = 4; i + 4 < u.grid.size(); ++i)
        if (u.grid.r[i] >= 0.1 && u.grid.r[i] <= upper) radii.push_back(u.grid.r[i]);
    const functionals::MonotonicityReport rep = functionals::monotonicity_curve(u, radii);
    double max_m = 0.0;
    for (double m : rep.M) max_m = std::max(max_m, std::abs(m));
    const double tol = 1e-6 * (1.0 + max_m);
    double worst = 1e300;
    for (std::size_t i = 0; i < radii.size(); ++i)
        worst = std::min(worst, rep.dMdr[i] - rep.rhs_bound[i]);
    ctx.check("functionals.shot_derivative_bound",
              worst >= -tol && d.drift_const == 44.0,
              "min(dMdr - bound) " + fmt(worst) + " vs -tol " + fmt(-tol) + ", C = 44, " +
                  std::to_string(radii.size()) + " radii, termination " +
                  (shot.terminated == fields::Termination::BlowupDetected ? "blowup at "
                                                                          : "reached rmax ") +
                  fmt(shot.termination_radius));
}

void check_shot_monotonicity_weighted(Ctx& ctx) {
    // the derivative bound on genuine solutions of weighted configurations,
    // inside the exponent range of the monotonicity statement
    double worst = 1e300;
    for (const auto& [N, p, a, b, u0, v0] :
         std::vector<std::array<double, 6>>{{13.0, 2.5, 0.5, 0.5, 1.0, 0.2},
                                            {10.0, 4.0, -1.0, 1.0, 0.8, 0.05}}) {
        const SystemParams P = SystemParams::make(N, p, a, b);
        const RadialGrid grid = fields::log_grid(0.01, 20.0, ctx.quick ? 600 : 1200);
        const fields::ShootingResult shot = fields::shoot(P, u0, v0, grid);
        std::vector<double> radii;
        for (std::size_t i = 4; i + 4 < shot.field.grid.size(); ++i)
            if (shot.field.grid.r[i] >= 0.1 &&
                shot.field.grid.r[i] <= 0.9 * shot.termination_radius)
                radii.push_back(shot.field.grid.r[i]);
        const functionals::MonotonicityReport rep =
            functionals::monotonicity_curve(shot.field, radii);
        double max_m = 0.0;
        for (double m : rep.M) max_m = std::max(max_m, std::abs(m));
        for (std::size_t i = 0; i < radii.size(); ++i)
            worst = std::min(worst, rep.dMdr[i] - rep.rhs_bound[i]);
        if (worst < -1e-6 * (1.0 + max_m)) {
            ctx.check("functionals.shot_derivative_bound_weighted", false,
                      "violated at N=" + fmt(N) + ", min slack " + fmt(worst));
            return;
        }
    }
    ctx.check("functionals.shot_derivative_bound_weighted", true,
              "two weighted configurations, min(dMdr - bound) " + fmt(worst));
}

void check_identity_residuals(Ctx& ctx) {  // acceptance 7
    const SystemParams P = SystemParams::make(12, 3, 0, 0);
    // exact singular solution
    const int n1 = 641;
    const RadialGrid g1 = fields::log_grid(0.0625, 2.0, n1);
    const RadialGrid g2 = fields::log_grid(0.0625, 2.0, 2 * n1 - 1);
    const Field u1 = fields::singular_field(P, g1);
    const Field u2 = fields::singular_field(P, g2);
    const functionals::ResidualReport p1 = functionals::pohozaev_residual(u1, 1.0);
    const functionals::ResidualReport p2 = functionals::pohozaev_residual(u2, 1.0);
    const functionals::ResidualReport e1 = functionals::energy_identity_residual(u1, 1.0);
    const functionals::ResidualReport e2 = functionals::energy_identity_residual(u2, 1.0);
    const double ratio_p = p1.relative / std::max(p2.relative, 1e-300);
    const double ratio_e = e1.relative / std::max(e2.relative, 1e-300);
    ctx.check("functionals.pohozaev_singular",
              p1.relative <= 1e-8 && ratio_p >= 8.0,
              "rel " + fmt(p1.relative) + ", refine ratio " + fmt(ratio_p));
    ctx.check("functionals.energy_identity_singular",
              e1.relative <= 1e-8 && ratio_e >= 8.0,
              "rel " + fmt(e1.relative) + ", refine ratio " + fmt(ratio_e));

    // shot solution; the tight ODE step keeps quadrature the leading error
    const RadialGrid gs1 = fields::log_grid(0.01, 1.0, 641);
    const RadialGrid gs2 = fields::log_grid(0.01, 1.0, 1281);
    const Field s1 = fields::shoot(P, 1.0, 0.1, gs1, 0.25).field;
    const Field s2 = fields::shoot(P, 1.0, 0.1, gs2, 0.25).field;
    const functionals::ResidualReport sp1 = functionals::pohozaev_residual(s1, 1.0);
    const functionals::ResidualReport sp2 = functionals::pohozaev_residual(s2, 1.0);
    const functionals::ResidualReport se1 = functionals::energy_identity_residual(s1, 1.0);
    const functionals::ResidualReport se2 = functionals::energy_identity_residual(s2, 1.0);
    const double ratio_sp = sp1.relative / std::max(sp2.relative, 1e-300);
    const double ratio_se = se1.relative / std::max(se2.relative, 1e-300);
    ctx.check("functionals.pohozaev_shot", sp1.relative <= 1e-6 && ratio_sp >= 8.0,
              "rel " + fmt(sp1.relative) + ", refine ratio " + fmt(ratio_sp));
    ctx.check("functionals.energy_identity_shot", se1.relative <= 1e-6 && ratio_se >= 8.0,
              "rel " + fmt(se1.relative) + ", refine ratio " + fmt(ratio_se));
}

void check_pointwise_identity(Ctx& ctx) {  // acceptance 8
    std::mt19937_64 rng(16);
    const int count = ctx.quick ? 25 : 100;
    std::uniform_int_distribution<int> coef(-5, 5);
    std::uniform_int_distribution<int> nterms(2, 6);
    std::uniform_int_distribution<int> expo(0, 4);
    bool all_zero = true;
    auto random_poly = [&]() {
        identities::MultiPoly p(3);
        const int t = nterms(rng);
        for (int i = 0; i < t; ++i) {
            identities::MultiPoly::Monomial e{};
            int total = 5;
            while (total > 4) {
                e = {expo(rng), expo(rng), expo(rng), 0};
                total = e[0] + e[1] + e[2];
            }
            p = p + identities::MultiPoly::monomial(3, e, double(coef(rng)));
        }
        return p;
    };
    for (int i = 0; i < count; ++i) {
        const identities::MultiPoly diff = identities::product_identity_gap(random_poly(), random_poly());
        if (!diff.is_zero()) all_zero = false;
    }
    ctx.check("identities.pointwise_product_identity", all_zero,
              std::to_string(count) + " random degree<=4 pairs, difference exactly zero");
}

void check_integral_identities(Ctx& ctx) {  // acceptance 9
    double worst = 0.0;
    for (const auto& [N, beta] : std::vector<std::pair<double, double>>{{12, 0}, {12, 2}, {9, 1}})
        for (const std::vector<double>& zc :
             std::vector<std::vector<double>>{{1.0}, {0.0, 1.0}, {0.0, 0.0, 1.0}}) {
            const SystemParams P = SystemParams::make(N, 3.0, 0.0, beta);
            const identities::RadialIdentityReport res =
                identities::radial_identity_residuals(zc, P, ctx.quick ? 2001 : 4001);
            worst = std::max({worst, res.bilaplacian_pairing.relative, res.gradient_product.relative});
        }
    ctx.check("identities.weighted_integral_identities", worst <= 1e-8,
              "9 cases, max rel residual " + fmt(worst));
}

void check_quadrature_convergence(Ctx& ctx) {
    const SystemParams P = SystemParams::make(12, 3, 0, 0);
    const int n = 301;
    double m[3];
    for (int level = 0; level < 3; ++level) {
        const int nn = (n - 1) * (1 << level) + 1;
        const RadialGrid grid = fields::log_grid(0.25, 4.0, nn);
        const Field bump = fields::bump_field({{0, 1.0, 1.0, 0.5}, {1, 0.5, 1.2, 0.4}}, P, grid);
        const double r = grid.r[(nn - 1) / 2];
        const functionals::MonotonicityReport rep = functionals::monotonicity_curve(bump, {r});
        m[level] = rep.M[0];
    }
    const double order = std::log2(std::abs(m[0] - m[1]) / std::abs(m[1] - m[2]));
    ctx.check("functionals.quadrature_order", order >= 3.5,
              "measured order " + fmt(order) + " (expect about 4)");

    // residual decreases at the quadrature order under refinement of the
    // integral-identity check as well
    const identities::RadialIdentityReport c1 = identities::radial_identity_residuals({0.0, 1.0}, P, 201);
    const identities::RadialIdentityReport c2 = identities::radial_identity_residuals({0.0, 1.0}, P, 401);
    const double ratio = c1.gradient_product.relative / std::max(c2.gradient_product.relative, 1e-300);
    ctx.check("identities.integral_identity_order", ratio >= 8.0,
              "refine ratio " + fmt(ratio));
}

void check_mode_positivity(Ctx& ctx) {  // acceptance 10
    std::mt19937_64 rng(17);
    const int count = ctx.quick ? 10 : 50;
    double min_q = 1e300;
    for (int i = 0; i < count; ++i) {
        const SystemParams P = sample_window(rng);
        for (int k = 0; k <= 50; ++k) {
            const double nu = double(k) * (double(k) + P.N - 2.0);
            min_q = std::min(min_q, functionals::mode_quadratic(P, nu));
        }
    }
    double worst_root = 0.0;
    for (int i = 0; i < (ctx.quick ? 4 : 10); ++i) {
        const SystemParams P = sample_params(rng);
        critdim::CritDimResult cd;
        try {
            cd = critdim::critical_dimension(P);
        } catch (const Error&) {
            continue;
        }
        double root_n = cd.root;
        if (root_n < std::max(5.0, 4.0 + 2.0 * P.beta)) continue;
        const SystemParams PR = SystemParams::make(root_n, P.p, P.alpha, P.beta);
        const critdim::ThresholdValues t = critdim::threshold_functions(root_n, PR);
        worst_root = std::max(
            worst_root, std::abs(functionals::mode_quadratic(PR, 0.0)) /
                            std::max(1.0, std::abs(t.hardy)));
    }
    ctx.check("functionals.mode_positivity_window", min_q > 0.0,
              std::to_string(count) + " window params, min Q " + fmt(min_q));
    ctx.check("functionals.mode_quadratic_zero_at_root", worst_root <= 1e-7,
              "max |Q(0)|/hardy at computed roots " + fmt(worst_root));
}

void check_stability_witness(Ctx& ctx) {
    // below the critical dimension, the plateau family witnesses instability;
    // the fixed bump family never does (quotients stay far above the source
    // threshold) -- both directions are part of the contract
    const SystemParams P = SystemParams::make(12, 3, 0, 0);
    const RadialGrid grid = fields::log_grid(0.01, 60.0, ctx.quick ? 900 : 1500);
    const Field u = fields::singular_field(P, grid);
    bool witness_found = false;
    double best = 0.0;
    for (double L : {1.0, 1.5, 2.0}) {
        const Field zeta = plateau_zeta(P, grid, L);
        const functionals::ResidualReport rep = functionals::stability_rayleigh(u, zeta);
        if (rep.lhs > rep.rhs) witness_found = true;
        best = std::max(best, rep.lhs / rep.rhs);
    }
    ctx.check("functionals.instability_witness_below_critdim", witness_found,
              "plateau family, max lhs/rhs " + fmt(best));

    // at N=19 (above the critical dimension) the same family must not violate
    const SystemParams P19 = SystemParams::make(19, 3, 0, 0);
    const Field u19 = fields::singular_field(P19, grid);
    bool stable_ok = true;
    double worst = 1e300;
    for (double L : {1.0, 1.5, 2.0}) {
        const Field zeta = plateau_zeta(P19, grid, L);
        const functionals::ResidualReport rep = functionals::stability_rayleigh(u19, zeta);
        worst = std::min(worst, (rep.rhs - rep.lhs) / rep.scale);
        if (rep.rhs - rep.lhs < -1e-8 * rep.scale) stable_ok = false;
    }
    std::mt19937_64 rng(18);
    std::uniform_real_distribution<double> uc(0.3, 3.0), uw(0.3, 0.79), ua(0.5, 2.0);
    for (int i = 0; i < (ctx.quick ? 10 : 50); ++i) {
        const double c = uc(rng);
        const Field zeta =
            fields::bump_field({{0, ua(rng), c, uw(rng) * c}}, P19, grid);
        const functionals::ResidualReport rep = functionals::stability_rayleigh(u19, zeta);
        if (rep.rhs - rep.lhs < -1e-8 * rep.scale) stable_ok = false;
    }
    ctx.check("functionals.stable_above_critdim", stable_ok,
              "no witness at N=19; min normalized slack " + fmt(worst));
}

void check_hardy_rellich(Ctx& ctx) {  // acceptance 11
    std::mt19937_64 rng(19);
    const int count = ctx.quick ? 10 : 50;
    double worst = 0.0;
    bool ok = true;
    for (double beta : {0.0, 2.0}) {
        const SystemParams P = SystemParams::make(12, 3, 0, beta);
        const RadialGrid grid = fields::log_grid(0.05, 8.0, ctx.quick ? 500 : 800);
        std::uniform_real_distribution<double> uc(0.3, 3.0), uw(0.3, 0.79), ua(0.5, 2.0);
        std::uniform_int_distribution<int> uk(0, 3);
        for (int i = 0; i < count; ++i) {
            const double c = uc(rng);
            const Field zeta =
                fields::bump_field({{uk(rng), ua(rng), c, uw(rng) * c}}, P, grid);
            const functionals::ResidualReport rep = functionals::hardy_rellich_ratio(zeta);
            const double slack = (rep.rhs - rep.lhs) / rep.scale;
            worst = std::min(worst, slack);
            if (slack < -1e-8) ok = false;
        }
    }
    ctx.check("functionals.hardy_rellich_inequality", ok,
              "2x" + std::to_string(count) + " random bumps, min normalized slack " + fmt(worst));
}

void check_regimes(Ctx& ctx) {  // acceptance 12
    const SystemParams P = SystemParams::make(12, 3, 0, 0);
    const double crit = critdim::critical_dimension(P).root;
    auto tag = [&](double N) {
        return classify_regime(SystemParams::make(N, 3, 0, 0), crit);
    };
    const bool ok = tag(7.0) == RegimeTag::BelowHyperbola && tag(8.0) == RegimeTag::OnHyperbola &&
                    tag(12.0) == RegimeTag::Window && tag(19.0) == RegimeTag::AtOrAboveCritDim;
    ctx.check("params.regime_classification", ok,
              "N = 7/8/12/19 -> below/on/window/at-or-above");
}

void check_zonal_basis(Ctx& ctx) {
    double worst_orth = 0.0, worst_eig = 0.0, worst_norm = 0.0;
    for (double N : {5.0, 9.5, 12.0}) {
        const zonal::AngularRule rule(N, 256);
        const zonal::ZonalBasis basis(N, 6, rule);
        std::vector<double> prod(rule.t.size());
        for (int k = 0; k <= 6; ++k) {
            for (int j = 0; j <= k; ++j) {
                for (std::size_t q = 0; q < prod.size(); ++q)
                    prod[q] = basis.value(k)[q] * basis.value(j)[q];
                const double ip = rule.integrate(prod);
                if (j == k)
                    worst_norm = std::max(worst_norm, std::abs(ip - 1.0));
                else
                    worst_orth = std::max(worst_orth, std::abs(ip));
            }
            if (k <= 5) {
                const double nu = basis.eigenvalue(k);
                for (std::size_t q = 0; q < prod.size(); ++q) {
                    const double want = -nu * basis.value(k)[q];
                    const double got = basis.beltrami(k)[q];
                    if (std::abs(want) > 1e-8)
                        worst_eig = std::max(worst_eig, std::abs(got - want) / std::abs(want));
                }
            }
        }
    }
    ctx.check("zonal.orthonormality", worst_orth <= 1e-10 && worst_norm <= 1e-12,
              "max off-diagonal " + fmt(worst_orth) + ", norm err " + fmt(worst_norm));
    ctx.check("zonal.beltrami_eigenvalue", worst_eig <= 1e-8,
              "k <= 5, max rel err " + fmt(worst_eig));

    const double m0 = zonal::sphere_moment(12.0, 0, 2.0);
    const double m1 = zonal::sphere_moment(12.0, 1, 2.0);
    const double m4 = zonal::sphere_moment(12.0, 0, 4.0);
    const double area = quad::sphere_area(12.0);
    const bool ok = std::abs(m0 - 1.0) <= 1e-12 && std::abs(m1 - 1.0) <= 1e-12 &&
                    rel_diff(m4, 1.0 / area) <= 1e-12;
    ctx.check("zonal.sphere_moments", ok,
              "q=2 moments 1, q=4 moment of the constant mode = 1/area");
}

void check_shooting_convergence(Ctx& ctx) {
    const SystemParams P = SystemParams::make(12, 3, 0, 0);
    const RadialGrid grid = fields::log_grid(0.01, 1.0, 257);
    const std::size_t i1 = grid.index_of(1.0);
    double u_at[3];
    int level = 0;
    for (double scale : {1.0, 0.5, 0.25}) {
        const fields::ShootingResult s = fields::shoot(P, 1.0, 0.1, grid, scale);
        u_at[level++] = s.field.modes[0].f[i1];
    }
    const double d01 = std::abs(u_at[0] - u_at[1]);
    const double d12 = std::abs(u_at[1] - u_at[2]);
    const double order = std::log2(d01 / std::max(d12, 1e-300));
    const double rel_change = d01 / std::abs(u_at[2]);
    ctx.check("fields.shooting_step_convergence", order >= 3.5 && rel_change <= 1e-8,
              "halving order " + fmt(order) + ", rel change " + fmt(rel_change));
}

void check_field_roundtrip(Ctx& ctx) {
    const SystemParams P = SystemParams::make(12, 3, 0, 0);
    const RadialGrid grid = fields::log_grid(0.01, 5.0, 64);
    const fields::ShootingResult s = fields::shoot(P, 1.0, 0.1, grid);
    std::ostringstream out;
    fields::dump_field(s.field, out);
    std::istringstream in(out.str());
    const Field back = fields::read_field(in);
    bool exact = back.grid.size() == s.field.grid.size() &&
                 back.modes.size() == s.field.modes.size();
    if (exact)
        for (std::size_t i = 0; i < back.grid.size(); ++i) {
            exact = exact && back.grid.r[i] == s.field.grid.r[i];
            exact = exact && back.modes[0].f[i] == s.field.modes[0].f[i];
            exact = exact && back.modes[0].fp[i] == s.field.modes[0].fp[i];
            exact = exact && back.modes[0].fpp[i] == s.field.modes[0].fpp[i];
        }
    ctx.check("cli.field_roundtrip_bit_exact", exact,
              "dump + read reproduces r, f, fp, fpp bitwise");
}

void check_sweep_determinism(Ctx& ctx) {  // acceptance 13
    std::vector<csvio::SweepRow> rows;
    for (double p : {1.5, 2.0, 3.0, 5.0, 7.0, 9.0})
        for (double a : {0.0, 1.0})
            for (double b : {0.0, 0.5, 1.0}) rows.push_back({p, a, b});
    if (ctx.quick) rows.resize(12);
    const std::vector<double> n_values{10.0, 12.0};
    const std::string out1 = cli::sweep_to_string(rows, n_values, 1);
    const std::string out4 = cli::sweep_to_string(rows, n_values, 4);
    ctx.check("cli.sweep_jobs_deterministic", out1 == out4 && !out1.empty(),
              std::to_string(rows.size()) + " rows x 2 N-values, jobs 1 vs 4 byte-identical");
}

}  // namespace

std::vector<CheckResult> run_suite(bool quick) {
    Ctx ctx{quick, {}};
    ctx.run("params", check_params_identities);
    ctx.run("endpoint_gaps", check_endpoint_gaps);
    ctx.run("threshold_relations", check_threshold_relations);
    ctx.run("critical_dimension", check_critical_dimension);
    ctx.run("interior_inequalities", check_interior_inequalities);
    ctx.run("literature_bounds", check_literature_bounds);
    ctx.run("singular_solution", check_singular_solution);
    ctx.run("zonal_basis", check_zonal_basis);
    ctx.run("shooting_convergence", check_shooting_convergence);
    ctx.run("monotonicity_constancy", check_monotonicity_constancy);
    ctx.run("scaling_invariance", check_scaling_invariance);
    ctx.run("shot_monotonicity", check_shot_monotonicity);
    ctx.run("shot_monotonicity_weighted", check_shot_monotonicity_weighted);
    ctx.run("identity_residuals", check_identity_residuals);
    ctx.run("pointwise_identity", check_pointwise_identity);
    ctx.run("integral_identities", check_integral_identities);
    ctx.run("quadrature_convergence", check_quadrature_convergence);
    ctx.run("mode_positivity", check_mode_positivity);
    ctx.run("stability_witness", check_stability_witness);
    ctx.run("hardy_rellich", check_hardy_rellich);
    ctx.run("regimes", check_regimes);
    ctx.run("field_roundtrip", check_field_roundtrip);
    ctx.run("sweep_determinism", check_sweep_determinism);
    return ctx.out;
}

}  // namespace lanelab::verify
