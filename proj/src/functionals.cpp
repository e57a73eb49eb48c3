// functionals.cpp

#include "lanelab/functionals.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <memory>
#include <ostream>

#include "lanelab/errors.hpp"
#include "lanelab/kernels.hpp"
#include "lanelab/quadrature.hpp"
#include "lanelab/zonal.hpp"

namespace lanelab::functionals {

ResidualReport make_residual(double lhs, double rhs, double term_scale) {
    ResidualReport rep;
    rep.lhs = lhs;
    rep.rhs = rhs;
    rep.residual = lhs - rhs;
    rep.scale = std::max({std::abs(lhs), std::abs(rhs), std::abs(term_scale), 1e-300});
    rep.relative = std::abs(rep.residual) / rep.scale;
    return rep;
}

namespace {

// Angular tables bound to one field; load_node fills pointwise arrays of
// u, du/dr, d2u/dr2, Lap u, d(Lap u)/dr and the polar-angle derivative at
// the rule nodes.
class Evaluator {
  public:
    explicit Evaluator(const fields::Field& f) : field_(f), rule_(f.params.N, 256) {
        int kmax = 0;
        for (const auto& m : f.modes) kmax = std::max(kmax, m.degree);
        basis_ = std::make_unique<zonal::ZonalBasis>(f.params.N, kmax, rule_);
        nq_ = rule_.t.size();
        u.resize(nq_);
        ur.resize(nq_);
        urr.resize(nq_);
        lap.resize(nq_);
        lapr.resize(nq_);
        dphi.resize(nq_);
        tmp_.resize(nq_);
    }

    const fields::Field& field() const { return field_; }
    const zonal::AngularRule& rule() const { return rule_; }

    void load_node(std::size_t i) {
        const double N = field_.params.N;
        const double r = field_.grid.r[i];
        std::fill(u.begin(), u.end(), 0.0);
        std::fill(ur.begin(), ur.end(), 0.0);
        std::fill(urr.begin(), urr.end(), 0.0);
        std::fill(lap.begin(), lap.end(), 0.0);
        std::fill(lapr.begin(), lapr.end(), 0.0);
        std::fill(dphi.begin(), dphi.end(), 0.0);
        for (const fields::ZonalMode& m : field_.modes) {
            const double nu = basis_->eigenvalue(m.degree);
            const double f = m.f[i], fp = m.fp[i], fpp = m.fpp[i], fppp = m.fppp[i];
            const double clap = fpp + (N - 1.0) / r * fp - nu / (r * r) * f;
            const double clapr = fppp + (N - 1.0) * (fpp / r - fp / (r * r)) -
                                 nu * (fp / (r * r) - 2.0 * f / (r * r * r));
            const double* val = basis_->value(m.degree).data();
            const double* dph = basis_->dphi(m.degree).data();
            kern::axpy(f, val, u.data(), nq_);
            kern::axpy(fp, val, ur.data(), nq_);
            kern::axpy(fpp, val, urr.data(), nq_);
            kern::axpy(clap, val, lap.data(), nq_);
            kern::axpy(clapr, val, lapr.data(), nq_);
            kern::axpy(f, dph, dphi.data(), nq_);
        }
    }

    double int_prod(const std::vector<double>& a, const std::vector<double>& b) const {
        return kern::dot3(rule_.weight.data(), a.data(), b.data(), nq_);
    }
    double int_abs_pow(const std::vector<double>& a, double q) const {
        for (std::size_t i = 0; i < nq_; ++i) tmp_[i] = std::pow(std::abs(a[i]), q);
        return kern::dot(rule_.weight.data(), tmp_.data(), nq_);
    }
    // integral of (c*u + ur)^2 over the sphere
    double int_hom2(double c) const {
        for (std::size_t i = 0; i < nq_; ++i) tmp_[i] = c * u[i] + ur[i];
        return int_prod(tmp_, tmp_);
    }

    std::vector<double> u, ur, urr, lap, lapr, dphi;

  private:
    const fields::Field& field_;
    zonal::AngularRule rule_;
    std::unique_ptr<zonal::ZonalBasis> basis_;
    std::size_t nq_ = 0;
    mutable std::vector<double> tmp_;
};

struct Curve {
    std::vector<double> M;
    std::array<std::vector<double>, 7> terms;
    std::vector<double> shom2;  // unit-sphere integral of (L u/r + du/dr)^2 per node
    std::size_t lo = 0, hi = 0;  // valid node range [lo, hi]
};

// Inner-ball analytic extension for a tagged power-law field: the radial
// integrand value at the first node times r0/(q+1), q its power.
double inner_extension(double g0, double r0, double q) {
    if (!(q > -1.0 + 1e-9)) return 0.0;  // divergent below the grid; keep the truncation
    return g0 * r0 / (q + 1.0);
}

Curve compute_curve(const fields::Field& field) {
    const SystemParams& P = field.params;
    const DerivedParams d = derive(P);
    const double N = P.N, beta = P.beta, alpha = P.alpha, p = P.p;
    const double lam = d.decay_u;
    const std::vector<double>& r = field.grid.r;
    const std::size_t n = r.size();
    if (n < 5) throw StencilError("monotonicity: grid too small");
    const double h = field.grid.log_step;

    Evaluator ev(field);
    std::vector<double> e_lap(n), e_pot(n), su2(n), shom2(n), sang2(n);
    for (std::size_t i = 0; i < n; ++i) {
        ev.load_node(i);
        const double ri = r[i];
        const double w = std::pow(ri, N - 1.0);
        e_lap[i] = w * 0.5 * std::pow(ri, -beta) * ev.int_prod(ev.lap, ev.lap);
        e_pot[i] = w * std::pow(ri, alpha) / (p + 1.0) * ev.int_abs_pow(ev.u, p + 1.0);
        su2[i] = ev.int_prod(ev.u, ev.u);
        shom2[i] = ev.int_hom2(lam / ri);
        sang2[i] = ev.int_prod(ev.dphi, ev.dphi);
    }

    double inner_lap = 0.0, inner_pot = 0.0;
    if (field.power_law) {
        const double e = field.power_law->exponent;
        inner_lap = inner_extension(e_lap[0], r[0], N - 5.0 - beta + 2.0 * e);
        inner_pot = inner_extension(e_pot[0], r[0], N - 1.0 + alpha + e * (p + 1.0));
    }

    // bracketed radius-functions whose d/dr enters the functional
    std::vector<double> F4(n), F5(n), F7(n);
    for (std::size_t i = 0; i < n; ++i) {
        F4[i] = std::pow(r[i], 2.0 * lam + 1.0) * su2[i];
        F5[i] = std::pow(r[i], 2.0 * lam) * shom2[i];
        F7[i] = std::pow(r[i], 2.0 * lam + 1.0) * sang2[i];
    }

    const double c2 = 0.5 * (1.0 + beta) * lam * (N - 2.0 - lam);
    const double c3 = 0.5 * lam * (N - 2.0 - lam);
    const double c5 = 0.5 * (1.0 + beta - lam);

    Curve curve;
    curve.lo = 2;
    curve.hi = n - 3;
    curve.M.assign(n, 0.0);
    for (auto& t : curve.terms) t.assign(n, 0.0);
    curve.shom2 = shom2;

    for (std::size_t j = curve.lo; j <= curve.hi; ++j) {
        const double ball_lap = quad::integrate_log_nodes(r, e_lap, 0, j);
        const double ball_pot = quad::integrate_log_nodes(r, e_pot, 0, j);
        const double rho = r[j];
        const double scale = std::pow(rho, d.energy_exp);
        const double t0 = scale * (inner_lap + ball_lap);
        const double t1 = -scale * (inner_pot + ball_pot);
        const double t2 = c2 * std::pow(rho, 2.0 * lam) * su2[j];
        const double t3 = c3 * quad::deriv_log_nodes(r, F4, j, h);
        const double t4 = 0.5 * rho * rho * rho * quad::deriv_log_nodes(r, F5, j, h);
        const double t5 = c5 * std::pow(rho, 2.0 * lam) * sang2[j];
        const double t6 = 0.5 * quad::deriv_log_nodes(r, F7, j, h);
        curve.terms[0][j] = t0;
        curve.terms[1][j] = t1;
        curve.terms[2][j] = t2;
        curve.terms[3][j] = t3;
        curve.terms[4][j] = t4;
        curve.terms[5][j] = t5;
        curve.terms[6][j] = t6;
        curve.M[j] = t0 + t1 + t2 + t3 + t4 + t5 + t6;
    }
    return curve;
}

}  // namespace

double ball_energy(const fields::Field& field, double R) {
    const SystemParams& P = field.params;
    const std::size_t iR = field.grid.index_of(R);
    Evaluator ev(field);
    const std::vector<double>& r = field.grid.r;
    std::vector<double> g(iR + 1);
    for (std::size_t i = 0; i <= iR; ++i) {
        ev.load_node(i);
        const double ri = r[i];
        g[i] = std::pow(ri, P.N - 1.0) *
               (0.5 * std::pow(ri, -P.beta) * ev.int_prod(ev.lap, ev.lap) -
                std::pow(ri, P.alpha) / (P.p + 1.0) * ev.int_abs_pow(ev.u, P.p + 1.0));
    }
    return quad::integrate_log_nodes(r, g, 0, iR);
}

MonotonicityReport monotonicity_curve(const fields::Field& field,
                                      const std::vector<double>& radii) {
    const std::size_t n = field.grid.size();
    if (n < 10) throw StencilError("monotonicity_curve: grid too small");
    std::vector<std::size_t> idx(radii.size());
    for (std::size_t k = 0; k < radii.size(); ++k) {
        const std::size_t i = field.grid.index_of(radii[k]);
        if (i < 4 || i + 4 >= n)
            throw StencilError("monotonicity_curve: radius too close to the grid ends");
        idx[k] = i;
    }

    const Curve curve = compute_curve(field);
    const DerivedParams d = derive(field.params);
    const double h = field.grid.log_step;
    const std::vector<double>& r = field.grid.r;

    MonotonicityReport rep;
    rep.radii = radii;
    rep.M.resize(radii.size());
    rep.dMdr.resize(radii.size());
    rep.rhs_bound.resize(radii.size());
    for (auto& t : rep.terms) t.resize(radii.size());
    for (std::size_t k = 0; k < radii.size(); ++k) {
        const std::size_t i = idx[k];
        rep.M[k] = curve.M[i];
        rep.dMdr[k] = (-curve.M[i + 2] + 8.0 * curve.M[i + 1] - 8.0 * curve.M[i - 1] +
                       curve.M[i - 2]) /
                      (12.0 * h) / r[i];
        rep.rhs_bound[k] =
            d.drift_const * std::pow(r[i], 2.0 * d.decay_u + 1.0) * curve.shom2[i];
        for (int t = 0; t < 7; ++t) rep.terms[t][k] = curve.terms[t][i];
    }
    return rep;
}

namespace {

struct BoundaryFluxes {
    double pohozaev = 0.0;  // combined Pohozaev boundary terms at one radius
    double energy = 0.0;    // combined energy-identity boundary terms
    double max_abs = 0.0;   // largest constituent magnitude (for residual scales)
};

BoundaryFluxes boundary_fluxes(Evaluator& ev, std::size_t i) {
    const SystemParams& P = ev.field().params;
    const double N = P.N, beta = P.beta, alpha = P.alpha, p = P.p;
    const double rho = ev.field().grid.r[i];
    ev.load_node(i);
    const double lap2 = ev.int_prod(ev.lap, ev.lap);
    const double pow_p1 = ev.int_abs_pow(ev.u, p + 1.0);
    const double lap_ur = ev.int_prod(ev.lap, ev.ur);
    const double lap_urr = ev.int_prod(ev.lap, ev.urr);
    const double lapr_ur = ev.int_prod(ev.lapr, ev.ur);
    const double lapr_u = ev.int_prod(ev.lapr, ev.u);
    const double lap_u = ev.int_prod(ev.lap, ev.u);

    const double b1 = 0.5 * std::pow(rho, N - beta) * lap2;
    const double b2 = -std::pow(rho, N + alpha) / (p + 1.0) * pow_p1;
    const double b3 = -std::pow(rho, N - 1.0 - beta) * (lap_ur + rho * lap_urr);
    const double b4 = std::pow(rho, N - beta) * (lapr_ur - beta / rho * lap_ur);

    const double e1 = std::pow(rho, N - 1.0 - beta) * lap_ur;
    const double e2 = -std::pow(rho, N - 1.0 - beta) * (lapr_u - beta / rho * lap_u);

    BoundaryFluxes bf;
    bf.pohozaev = b1 + b2 + b3 + b4;
    bf.energy = e1 + e2;
    bf.max_abs = std::max({std::abs(b1), std::abs(b2), std::abs(b3), std::abs(b4), std::abs(e1),
                           std::abs(e2)});
    return bf;
}

struct AnnulusIntegrals {
    double lap = 0.0;  // integral of |Lap u|^2 / |x|^beta
    double pot = 0.0;  // integral of |x|^alpha |u|^{p+1}
};

AnnulusIntegrals annulus_integrals(Evaluator& ev, std::size_t iR) {
    const SystemParams& P = ev.field().params;
    const std::vector<double>& r = ev.field().grid.r;
    std::vector<double> ga(iR + 1), gb(iR + 1);
    for (std::size_t i = 0; i <= iR; ++i) {
        ev.load_node(i);
        ga[i] = std::pow(r[i], P.N - 1.0 - P.beta) * ev.int_prod(ev.lap, ev.lap);
        gb[i] = std::pow(r[i], P.N - 1.0 + P.alpha) * ev.int_abs_pow(ev.u, P.p + 1.0);
    }
    AnnulusIntegrals out;
    out.lap = quad::integrate_log_nodes(r, ga, 0, iR);
    out.pot = quad::integrate_log_nodes(r, gb, 0, iR);
    return out;
}

}  // namespace

ResidualReport pohozaev_residual(const fields::Field& field, double R) {
    const SystemParams& P = field.params;
    const std::size_t iR = field.grid.index_of(R);
    if (iR == 0) throw RangeError("pohozaev_residual: R must exceed the inner grid radius");
    Evaluator ev(field);
    const AnnulusIntegrals ann = annulus_integrals(ev, iR);
    const double lhs_a = 0.5 * (P.N - 4.0 - P.beta) * ann.lap;
    const double lhs_b = (P.N + P.alpha) / (P.p + 1.0) * ann.pot;
    const BoundaryFluxes outer = boundary_fluxes(ev, iR);
    const BoundaryFluxes inner = boundary_fluxes(ev, 0);
    const double lhs = lhs_a - lhs_b;
    const double rhs = outer.pohozaev - inner.pohozaev;
    const double term_scale =
        std::max({std::abs(lhs_a), std::abs(lhs_b), outer.max_abs, inner.max_abs});
    return make_residual(lhs, rhs, term_scale);
}

ResidualReport energy_identity_residual(const fields::Field& field, double R) {
    const std::size_t iR = field.grid.index_of(R);
    if (iR == 0)
        throw RangeError("energy_identity_residual: R must exceed the inner grid radius");
    Evaluator ev(field);
    const AnnulusIntegrals ann = annulus_integrals(ev, iR);
    const BoundaryFluxes outer = boundary_fluxes(ev, iR);
    const BoundaryFluxes inner = boundary_fluxes(ev, 0);
    const double lhs = ann.lap - ann.pot;
    const double rhs = outer.energy - inner.energy;
    const double term_scale =
        std::max({std::abs(ann.lap), std::abs(ann.pot), outer.max_abs, inner.max_abs});
    return make_residual(lhs, rhs, term_scale);
}

namespace {

void require_compact_support(const fields::Field& zeta) {
    const std::size_t n = zeta.grid.size();
    if (n < 5) throw SupportError("test function grid too small");
    for (const fields::ZonalMode& m : zeta.modes)
        for (std::size_t i : {std::size_t(0), std::size_t(1), n - 2, n - 1})
            if (m.f[i] != 0.0)
                throw SupportError("test function support touches the grid ends");
}

void require_same_grid(const fields::Field& a, const fields::Field& b) {
    if (a.grid.size() != b.grid.size())
        throw ParameterError("fields must share one grid");
    for (std::size_t i = 0; i < a.grid.size(); ++i)
        if (std::abs(a.grid.r[i] - b.grid.r[i]) > 1e-12 * a.grid.r[i])
            throw ParameterError("fields must share one grid");
}

}  // namespace

ResidualReport stability_rayleigh(const fields::Field& u, const fields::Field& zeta) {
    require_compact_support(zeta);
    require_same_grid(u, zeta);
    const SystemParams& P = u.params;
    Evaluator ev_u(u), ev_z(zeta);
    const std::vector<double>& r = u.grid.r;
    const std::size_t n = r.size();
    const std::size_t nq = ev_u.rule().t.size();
    std::vector<double> gl(n), gr(n), prod(nq);
    for (std::size_t i = 0; i < n; ++i) {
        ev_u.load_node(i);
        ev_z.load_node(i);
        for (std::size_t q = 0; q < nq; ++q)
            prod[q] = std::pow(std::abs(ev_u.u[q]), P.p - 1.0) * ev_z.u[q] * ev_z.u[q];
        const double ang = kern::dot(ev_u.rule().weight.data(), prod.data(), nq);
        gl[i] = P.p * std::pow(r[i], P.N - 1.0 + P.alpha) * ang;
        gr[i] = std::pow(r[i], P.N - 1.0 - P.beta) * ev_z.int_prod(ev_z.lap, ev_z.lap);
    }
    const double lhs = quad::integrate_log_nodes(r, gl, 0, n - 1);
    const double rhs = quad::integrate_log_nodes(r, gr, 0, n - 1);
    return make_residual(lhs, rhs);
}

double mode_quadratic(const SystemParams& params, double nu) {
    if (nu < 0.0) throw ParameterError("mode_quadratic: nu must be >= 0");
    const DerivedParams d = derive(params);
    const double N = params.N, b = params.beta, p = params.p;
    const double hardy = (N + b) * (N + b) * (N - 4.0 - b) * (N - 4.0 - b) / 16.0;
    const double hardy_grad = (N + b) * (N - 4.0 - b) / 2.0;
    return (p - 1.0) * nu * nu + (p * d.mode_coupling - hardy_grad) * nu +
           (p * d.singular_coef - hardy);
}

ResidualReport hardy_rellich_ratio(const fields::Field& zeta) {
    require_compact_support(zeta);
    const SystemParams& P = zeta.params;
    const double hardy =
        (P.N + P.beta) * (P.N + P.beta) * (P.N - 4.0 - P.beta) * (P.N - 4.0 - P.beta) / 16.0;
    Evaluator ev(zeta);
    const std::vector<double>& r = zeta.grid.r;
    const std::size_t n = r.size();
    std::vector<double> gl(n), gr(n);
    for (std::size_t i = 0; i < n; ++i) {
        ev.load_node(i);
        gl[i] = hardy * std::pow(r[i], P.N - 5.0 - P.beta) * ev.int_prod(ev.u, ev.u);
        gr[i] = std::pow(r[i], P.N - 1.0 - P.beta) * ev.int_prod(ev.lap, ev.lap);
    }
    const double lhs = quad::integrate_log_nodes(r, gl, 0, n - 1);
    const double rhs = quad::integrate_log_nodes(r, gr, 0, n - 1);
    return make_residual(lhs, rhs);
}

fields::Field rescale_field(const fields::Field& field, double kappa) {
    if (!(kappa > 0.0)) throw ParameterError("rescale_field: kappa must be positive");
    const DerivedParams d = derive(field.params);
    const double lam = d.decay_u;
    fields::Field out;
    out.params = field.params;
    out.derivatives_analytic = field.derivatives_analytic;
    out.grid.log_step = field.grid.log_step;
    out.grid.r.resize(field.grid.size());
    for (std::size_t i = 0; i < field.grid.size(); ++i) out.grid.r[i] = field.grid.r[i] / kappa;
    const double s0 = std::pow(kappa, lam);
    for (const fields::ZonalMode& m : field.modes) {
        fields::ZonalMode mm;
        mm.degree = m.degree;
        const std::size_t n = m.f.size();
        mm.f.resize(n);
        mm.fp.resize(n);
        mm.fpp.resize(n);
        mm.fppp.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            mm.f[i] = s0 * m.f[i];
            mm.fp[i] = s0 * kappa * m.fp[i];
            mm.fpp[i] = s0 * kappa * kappa * m.fpp[i];
            mm.fppp[i] = s0 * kappa * kappa * kappa * m.fppp[i];
        }
        out.modes.push_back(std::move(mm));
    }
    if (field.power_law)
        out.power_law = fields::PowerLaw{
            field.power_law->amplitude * std::pow(kappa, lam + field.power_law->exponent),
            field.power_law->exponent};
    return out;
}

double scaling_gap(const fields::Field& field, double kappa, double r) {
    const std::size_t i = field.grid.index_of(kappa * r);
    const std::size_t n = field.grid.size();
    if (i < 2 || i + 2 >= n) throw StencilError("scaling_gap: radius too close to grid ends");
    const Curve c1 = compute_curve(field);
    const fields::Field resc = rescale_field(field, kappa);
    const Curve c2 = compute_curve(resc);
    return std::abs(c1.M[i] - c2.M[i]);
}

void dump_monotonicity(const MonotonicityReport& report, std::ostream& out) {
    auto num = [](double x) {
        char buf[40];
        std::snprintf(buf, sizeof(buf), "%.16e", x);
        return std::string(buf);
    };
    out << "r,M,dMdr,rhsBound,term1,term2,term3,term4,term5,term6,term7\n";
    for (std::size_t i = 0; i < report.radii.size(); ++i) {
        out << num(report.radii[i]) << "," << num(report.M[i]) << "," << num(report.dMdr[i])
            << "," << num(report.rhs_bound[i]);
        for (int t = 0; t < 7; ++t) out << "," << num(report.terms[t][i]);
        out << "\n";
    }
}

}  // namespace lanelab::functionals
