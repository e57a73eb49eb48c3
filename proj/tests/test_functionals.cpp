#include <doctest.h>

#include <cmath>
#include <sstream>

#include "lanelab/errors.hpp"
#include "lanelab/fields.hpp"
#include "lanelab/functionals.hpp"
#include "lanelab/quadrature.hpp"

using namespace lanelab;
using namespace lanelab::fields;
using namespace lanelab::functionals;

namespace {

Field zero_field(const SystemParams& P, const RadialGrid& grid) {
    return bump_field({{0, 0.0, 0.5 * (grid.r_min() + grid.r_max()), 0.1}}, P, grid);
}

}  // namespace

TEST_CASE("ball energy on the zero field and disjoint supports") {
    const SystemParams P = SystemParams::make(12, 3, 0, 0);
    const RadialGrid grid = log_grid(0.05, 4.0, 257);
    CHECK(ball_energy(zero_field(P, grid), grid.r[128]) == 0.0);
    const Field b = bump_field({{0, 1.0, 1.0, 0.4}}, P, grid);
    // outer radius below the support: nothing integrated
    CHECK(ball_energy(b, grid.r[10]) == 0.0);
    CHECK_THROWS_AS(ball_energy(b, 100.0), RangeError);
}

TEST_CASE("ball energy of the singular field over an annulus") {
    const SystemParams P = SystemParams::make(12, 3, 0, 0);
    const RadialGrid grid = log_grid(1.0, 2.0, 401);
    const Field u = singular_field(P, grid);
    const double want = quad::sphere_area(12.0) * (49152.0 - 36864.0) * 15.0 / 4.0;
    CHECK(ball_energy(u, 2.0) == doctest::Approx(want).epsilon(1e-9));
}

TEST_CASE("monotonicity of the zero field") {
    const SystemParams P = SystemParams::make(12, 3, 0, 0);
    const RadialGrid grid = log_grid(0.1, 2.0, 64);
    const Field z = zero_field(P, grid);
    const MonotonicityReport rep = monotonicity_curve(z, {grid.r[10], grid.r[30]});
    for (std::size_t i = 0; i < rep.radii.size(); ++i) {
        CHECK(rep.M[i] == 0.0);
        CHECK(rep.dMdr[i] == 0.0);
        CHECK(rep.rhs_bound[i] == 0.0);
    }
    CHECK_THROWS_AS(monotonicity_curve(z, {grid.r[2]}), StencilError);
    CHECK_THROWS_AS(monotonicity_curve(z, {grid.r[grid.size() - 2]}), StencilError);
}

TEST_CASE("identity residuals vanish on the zero field") {
    const SystemParams P = SystemParams::make(12, 3, 0, 0);
    const RadialGrid grid = log_grid(0.1, 2.0, 64);
    const Field z = zero_field(P, grid);
    const ResidualReport po = pohozaev_residual(z, grid.r[40]);
    CHECK(po.lhs == 0.0);
    CHECK(po.rhs == 0.0);
    CHECK(po.relative == 0.0);
    const ResidualReport en = energy_identity_residual(z, grid.r[40]);
    CHECK(en.residual == 0.0);
}

TEST_CASE("mode quadratic at hand-computed points") {
    const SystemParams P = SystemParams::make(12, 3, 0, 0);
    CHECK(mode_quadratic(P, 0.0) == doctest::Approx(576.0).epsilon(1e-14));
    CHECK(mode_quadratic(P, 11.0) == doctest::Approx(1610.0).epsilon(1e-14));
    // reconstruct the coefficients from three samples
    const double q0 = mode_quadratic(P, 0.0);
    const double q1 = mode_quadratic(P, 1.0);
    const double q2 = mode_quadratic(P, 2.0);
    const double a2 = 0.5 * (q2 - 2.0 * q1 + q0);
    const double a1 = q1 - q0 - a2;
    CHECK(a2 == doctest::Approx(P.p - 1.0).epsilon(1e-13));
    CHECK(a1 == doctest::Approx(P.p * 40.0 - 48.0).epsilon(1e-12));
    CHECK(q0 == doctest::Approx(P.p * 384.0 - 576.0).epsilon(1e-13));
    CHECK_THROWS_AS(mode_quadratic(P, -1.0), ParameterError);
}

TEST_CASE("stability form: zero solution never has a witness") {
    const SystemParams P = SystemParams::make(12, 3, 0, 0);
    const RadialGrid grid = log_grid(0.05, 4.0, 257);
    const Field u = zero_field(P, grid);
    const Field zeta = bump_field({{0, 1.0, 1.0, 0.4}}, P, grid);
    const ResidualReport rep = stability_rayleigh(u, zeta);
    CHECK(rep.lhs == 0.0);
    CHECK(rep.rhs > 0.0);

    // support reaching the grid ends is rejected
    const Field wide = bump_field({{0, 1.0, 1.0, 0.999}}, P, log_grid(0.01, 1.0, 64));
    const Field u2 = singular_field(P, log_grid(0.01, 1.0, 64));
    CHECK_THROWS_AS(stability_rayleigh(u2, wide), SupportError);
}

TEST_CASE("hardy-rellich comparison holds for bumps") {
    for (double beta : {0.0, 2.0}) {
        const SystemParams P = SystemParams::make(12, 3, 0, beta);
        const RadialGrid grid = log_grid(0.05, 8.0, 513);
        const Field zeta = bump_field({{0, 1.0, 1.0, 0.5}}, P, grid);
        const ResidualReport rep = hardy_rellich_ratio(zeta);
        CHECK(rep.rhs - rep.lhs >= -1e-8 * rep.scale);
        CHECK(rep.lhs > 0.0);
    }
    // degenerate and rejected inputs
    const SystemParams P = SystemParams::make(12, 3, 0, 0);
    const RadialGrid grid = log_grid(0.05, 8.0, 257);
    const ResidualReport zero = hardy_rellich_ratio(zero_field(P, grid));
    CHECK(zero.lhs == 0.0);
    CHECK(zero.rhs == 0.0);
    CHECK(zero.relative == 0.0);
    const Field wide = bump_field({{0, 1.0, 1.0, 0.97}}, P, log_grid(0.05, 1.5, 64));
    CHECK_THROWS_AS(hardy_rellich_ratio(wide), SupportError);
}

TEST_CASE("scaling invariance on a shot field") {
    const SystemParams P = SystemParams::make(12, 3, 0, 0);
    const RadialGrid grid = log_grid(0.01, 3.0, 400);
    const Field shot = lanelab::fields::shoot(P, 1.0, 0.1, grid).field;
    const std::size_t i = shot.grid.size() / 2;
    for (double kappa : {0.5, 2.0}) {
        const double gap = scaling_gap(shot, kappa, shot.grid.r[i] / kappa);
        const MonotonicityReport rep = monotonicity_curve(shot, {shot.grid.r[i]});
        CHECK(gap <= 1e-8 * (1.0 + std::abs(rep.M[0])));
    }
}

TEST_CASE("identity rescaling gives a zero gap") {
    const SystemParams P = SystemParams::make(12, 3, 0, 0);
    const RadialGrid grid = log_grid(0.25, 4.0, 129);
    const Field b = bump_field({{0, 1.0, 1.0, 0.5}}, P, grid);
    const std::size_t mid = grid.size() / 2;
    CHECK(scaling_gap(b, 1.0, grid.r[mid]) == 0.0);
}

TEST_CASE("term breakdown sums to the functional") {
    const SystemParams P = SystemParams::make(12, 3, 0, 0);
    const RadialGrid grid = log_grid(0.25, 4.0, 257);
    const Field b = bump_field({{0, 1.0, 1.0, 0.5}, {1, 0.4, 1.5, 0.5}}, P, grid);
    std::vector<double> radii{grid.r[80], grid.r[128], grid.r[200]};
    const MonotonicityReport rep = monotonicity_curve(b, radii);
    for (std::size_t i = 0; i < radii.size(); ++i) {
        double sum = 0.0;
        for (int t = 0; t < 7; ++t) sum += rep.terms[t][i];
        CHECK(sum == doctest::Approx(rep.M[i]).epsilon(1e-12));
    }
    std::ostringstream out;
    dump_monotonicity(rep, out);
    CHECK(out.str().rfind("r,M,dMdr,rhsBound,term1", 0) == 0);
}
