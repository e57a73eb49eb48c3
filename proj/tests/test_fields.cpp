#include <doctest.h>

#include <cmath>
#include <sstream>

#include "lanelab/errors.hpp"
#include "lanelab/fields.hpp"
#include "lanelab/quadrature.hpp"

using namespace lanelab;
using namespace lanelab::fields;

TEST_CASE("log grid construction") {
    CHECK_THROWS_AS(log_grid(1.0, 1.0, 8), RangeError);
    CHECK_THROWS_AS(log_grid(0.0, 1.0, 8), RangeError);

    const RadialGrid g3 = log_grid(0.5, 2.0, 3);
    REQUIRE(g3.size() == 3);
    CHECK(g3.r[0] == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(g3.r[1] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(g3.r[2] == doctest::Approx(2.0).epsilon(1e-15));

    const RadialGrid g = log_grid(1e-3, 1.0, 16);
    const double want = std::pow(1000.0, 1.0 / 15.0);
    for (std::size_t i = 0; i + 1 < g.size(); ++i)
        CHECK(g.r[i + 1] / g.r[i] == doctest::Approx(want).epsilon(1e-12));

    CHECK(g.index_of(1e-3) == 0);
    CHECK(g.index_of(1.0) == 15);
    CHECK_THROWS_AS(g.index_of(0.5 * (g.r[3] + g.r[4])), RangeError);
    CHECK_THROWS_AS(g.index_of(2.0), RangeError);
}

TEST_CASE("singular field values and derivatives") {
    const SystemParams P = SystemParams::make(12, 3, 0, 0);
    const RadialGrid grid = log_grid(0.25, 4.0, 129);
    const Field u = singular_field(P, grid);
    REQUIRE(u.modes.size() == 1);
    REQUIRE(u.power_law.has_value());
    const double psi0 = 1.0 / std::sqrt(quad::sphere_area(12.0));
    const std::size_t i1 = grid.index_of(1.0);
    const std::size_t i2 = grid.index_of(2.0);
    // pointwise value u(1) = sqrt(384), u(2) = u(1)/4
    CHECK(u.modes[0].f[i1] * psi0 == doctest::Approx(std::sqrt(384.0)).epsilon(1e-12));
    CHECK(u.modes[0].f[i2] * psi0 ==
          doctest::Approx(std::sqrt(384.0) / 4.0).epsilon(1e-12));
    CHECK(u.modes[0].fp[i1] == doctest::Approx(-2.0 * u.modes[0].f[i1]).epsilon(1e-13));

    // (N=7, p=3): both structural factors positive, coefficient 24
    const SystemParams P7 = SystemParams::make(7, 3, 0, 0);
    CHECK(derive(P7).singular_coef == doctest::Approx(24.0).epsilon(1e-14));
    CHECK_NOTHROW(singular_field(P7, grid));
    // (N=5, p=3): decay too strong, coefficient not positive
    CHECK_THROWS_AS(singular_field(SystemParams::make(5, 3, 0, 0), grid), GammaNonpositive);
}

TEST_CASE("bump field profile and smoothness") {
    const SystemParams P = SystemParams::make(12, 3, 0, 0);
    const RadialGrid grid = log_grid(0.25, 4.0, 257);
    const Field zero = bump_field({{0, 0.0, 1.0, 0.5}}, P, grid);
    for (double v : zero.modes[0].f) CHECK(v == 0.0);

    const Field b = bump_field({{0, 1.0, 1.0, 0.5}}, P, grid);
    const std::size_t ic = grid.index_of(1.0);
    CHECK(b.modes[0].f[ic] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(b.modes[0].fp[ic] == doctest::Approx(0.0));
    // outside the support everything vanishes
    CHECK(b.modes[0].f[0] == 0.0);
    CHECK(b.modes[0].fpp[0] == 0.0);

    // two entries with one degree merge into a single mode
    const Field merged = bump_field({{0, 1.0, 1.0, 0.5}, {0, 0.5, 2.0, 0.5}}, P, grid);
    CHECK(merged.modes.size() == 1);
    const Field two = bump_field({{0, 1.0, 1.0, 0.5}, {2, 0.5, 2.0, 0.5}}, P, grid);
    CHECK(two.modes.size() == 2);

    CHECK_THROWS_AS(bump_field({{0, 1.0, 1.0, 0.0}}, P, grid), ParameterError);
}

TEST_CASE("companion profile of the singular field") {
    const SystemParams P = SystemParams::make(12, 3, 0, 0);
    const RadialGrid grid = log_grid(0.25, 4.0, 129);
    const Field u = singular_field(P, grid);
    const Field v = companion_v(u);
    const double psi0 = 1.0 / std::sqrt(quad::sphere_area(12.0));
    const std::size_t i1 = grid.index_of(1.0);
    CHECK(v.modes[0].f[i1] * psi0 ==
          doctest::Approx(16.0 * std::sqrt(384.0)).epsilon(1e-12));
    const std::size_t i2 = grid.index_of(2.0);
    CHECK(v.modes[0].f[i2] * psi0 ==
          doctest::Approx(16.0 * std::sqrt(384.0) / 16.0).epsilon(1e-12));
}

TEST_CASE("degree-1 linear profile is harmonic") {
    const SystemParams P = SystemParams::make(12, 3, 0, 0);
    const RadialGrid grid = log_grid(0.25, 4.0, 65);
    Field f;
    f.params = P;
    f.grid = grid;
    f.derivatives_analytic = true;
    ZonalMode m;
    m.degree = 1;
    m.f = grid.r;
    m.fp.assign(grid.size(), 1.0);
    m.fpp.assign(grid.size(), 0.0);
    m.fppp.assign(grid.size(), 0.0);
    f.modes.push_back(m);
    const Field v = companion_v(f);
    for (std::size_t i = 0; i < grid.size(); ++i)
        CHECK(std::abs(v.modes[0].f[i]) <= 1e-12);
}

TEST_CASE("shooting: zero data gives the zero field") {
    const SystemParams P = SystemParams::make(12, 3, 0, 0);
    const RadialGrid grid = log_grid(0.01, 1.0, 64);
    const ShootingResult s = shoot(P, 0.0, 0.0, grid);
    CHECK(s.terminated == Termination::ReachedRmax);
    for (double v : s.field.modes[0].f) CHECK(v == 0.0);
    for (double v : s.v_profile) CHECK(v == 0.0);
}

TEST_CASE("shooting rejects bad setups") {
    const RadialGrid grid = log_grid(0.01, 1.0, 64);
    CHECK_THROWS_AS(shoot(SystemParams::make(12, 3, -2.5, 0), 1.0, 0.1, grid),
                    ParameterError);
    const RadialGrid coarse = log_grid(0.1, 1.0, 16);
    CHECK_THROWS_AS(shoot(SystemParams::make(12, 3, 0, 0), 1.0, 0.1, coarse),
                    ParameterError);
}

TEST_CASE("field dump and read round-trip is bit-exact") {
    const SystemParams P = SystemParams::make(12, 3, 0.5, 1.0);
    const RadialGrid grid = log_grid(0.01, 2.0, 48);
    const ShootingResult s = shoot(P, 1.0, 0.05, grid);
    std::ostringstream out;
    dump_field(s.field, out, {"termination_radius=test"});
    std::istringstream in(out.str());
    const Field back = read_field(in);
    REQUIRE(back.grid.size() == s.field.grid.size());
    REQUIRE(back.modes.size() == 1);
    for (std::size_t i = 0; i < back.grid.size(); ++i) {
        CHECK(back.grid.r[i] == s.field.grid.r[i]);
        CHECK(back.modes[0].f[i] == s.field.modes[0].f[i]);
        CHECK(back.modes[0].fp[i] == s.field.modes[0].fp[i]);
        CHECK(back.modes[0].fpp[i] == s.field.modes[0].fpp[i]);
    }
    CHECK(back.params.N == s.field.params.N);
    CHECK(back.params.alpha == s.field.params.alpha);
}
