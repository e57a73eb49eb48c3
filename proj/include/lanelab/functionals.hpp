// functionals.hpp -- energy, monotonicity, identity residuals, and the
// stability quadratic form, evaluated on discrete fields.
//
// Surface integrals reduce to the 1-D angular rule against zonal tables;
// radial integrals use composite Simpson on the log grid; every d/dr of a
// bracketed radius-function is a 4th-order centered difference on the
// evaluation nodes, never a symbolic expansion.  Ball integrals truncate at
// the grid's inner radius: the windowed-energy term adds the analytic
// inner-ball contribution for tagged power-law fields, while the identity
// residuals account for the truncation through inner boundary fluxes.
#pragma once

#include <array>
#include <iosfwd>
#include <vector>

#include "lanelab/fields.hpp"
#include "lanelab/params.hpp"

namespace lanelab::functionals {

struct ResidualReport {
    double lhs = 0.0;
    double rhs = 0.0;
    double residual = 0.0;  // lhs - rhs
    double scale = 0.0;     // max(|lhs|, |rhs|, largest constituent term, 1e-300)
    double relative = 0.0;  // |residual| / scale
};

ResidualReport make_residual(double lhs, double rhs, double term_scale = 0.0);

struct MonotonicityReport {
    std::vector<double> radii;
    std::vector<double> M;
    std::vector<double> dMdr;       // centered differences of M
    std::vector<double> rhs_bound;  // drift_const * r^{2+2L-N} * surface integral of
                                    // (L u / r + du/dr)^2, L the decay rate
    // Summands of the monotonicity functional, per radius:
    //   0: windowed energy, Laplacian part     1: windowed energy, potential part
    //   2: zeroth-order surface term           3: d/dr of the weighted u^2 surface term
    //   4: r^3/2 d/dr of the homogeneity-defect surface term
    //   5: zeroth-order angular-energy term    6: d/dr of the weighted angular-energy term
    std::array<std::vector<double>, 7> terms;
};

// Windowed energy over the annulus between the grid's inner radius and R;
// R must coincide with a grid node.
double ball_energy(const fields::Field& field, double R);

// The monotonicity functional, its derivative, and the derivative lower
// bound at the requested radii (each must be a grid node with at least four
// nodes of margin on both sides).
MonotonicityReport monotonicity_curve(const fields::Field& field,
                                      const std::vector<double>& radii);

// Pohozaev balance on the annulus between the inner grid radius and R; the
// right-hand side carries the fluxes through both boundary spheres.
ResidualReport pohozaev_residual(const fields::Field& field, double R);

// Energy identity balance on the same annulus.
ResidualReport energy_identity_residual(const fields::Field& field, double R);

// Second-variation stability form: lhs = p Int |x|^alpha
// |u|^{p-1} zeta^2, rhs = Int |Lap zeta|^2 / |x|^beta.  rhs - lhs >= 0 means
// zeta is not an instability witness.  zeta must vanish near the grid ends.
ResidualReport stability_rayleigh(const fields::Field& u, const fields::Field& zeta);

// Q(nu) = (p-1) nu^2 + (p*mode_coupling - hardy_grad) nu + (p*singular_coef - hardy).
double mode_quadratic(const SystemParams& params, double nu);

// Weighted Hardy-Rellich comparison: lhs = hardy(N) * Int zeta^2/|x|^{4+beta},
// rhs = Int |Lap zeta|^2/|x|^beta.
ResidualReport hardy_rellich_ratio(const fields::Field& zeta);

// kappa-rescaling u^k(x) = kappa^{decay_u} u(kappa x) resampled onto grid/kappa.
fields::Field rescale_field(const fields::Field& field, double kappa);

// |M(kappa r; 0, u) - M(r; 0, u^kappa)|; kappa*r must be a grid node with
// two nodes of margin.
double scaling_gap(const fields::Field& field, double kappa, double r);

// CSV: r,M,dMdr,rhsBound,term1..term7 with 17-significant-digit values.
void dump_monotonicity(const MonotonicityReport& report, std::ostream& out);

}  // namespace lanelab::functionals
