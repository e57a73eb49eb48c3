#include <doctest.h>

#include <cmath>

#include "lanelab/errors.hpp"
#include "lanelab/fields.hpp"
#include "lanelab/quadrature.hpp"

using namespace lanelab;

TEST_CASE("gauss-legendre integrates polynomials exactly") {
    const quad::GaussLegendre rule = quad::gauss_legendre(8);
    double sum_w = 0.0, sum_x2 = 0.0, sum_x14 = 0.0;
    for (int i = 0; i < 8; ++i) {
        sum_w += rule.w[i];
        sum_x2 += rule.w[i] * rule.x[i] * rule.x[i];
        sum_x14 += rule.w[i] * std::pow(rule.x[i], 14);
    }
    CHECK(sum_w == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(sum_x2 == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
    CHECK(sum_x14 == doctest::Approx(2.0 / 15.0).epsilon(1e-13));  // degree 14 <= 2*8-1
}

TEST_CASE("sphere areas") {
    CHECK(quad::sphere_area(2.0) == doctest::Approx(2.0 * M_PI).epsilon(1e-14));
    CHECK(quad::sphere_area(3.0) == doctest::Approx(4.0 * M_PI).epsilon(1e-14));
    // |S^11| = 2 pi^6 / 120
    CHECK(quad::sphere_area(12.0) ==
          doctest::Approx(2.0 * std::pow(M_PI, 6) / 120.0).epsilon(1e-14));
}

TEST_CASE("simpson on a log grid") {
    const fields::RadialGrid g = fields::log_grid(1.0, 2.0, 201);
    std::vector<double> cubic(g.size()), pw(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
        cubic[i] = g.r[i] * g.r[i] * g.r[i];
        pw[i] = std::pow(g.r[i], -2.5);
    }
    const double got = quad::integrate_log_nodes(g.r, cubic, 0, g.size() - 1);
    CHECK(got == doctest::Approx((16.0 - 1.0) / 4.0).epsilon(1e-8));
    const double want = (1.0 - std::pow(2.0, -1.5)) / 1.5;
    CHECK(quad::integrate_log_nodes(g.r, pw, 0, g.size() - 1) ==
          doctest::Approx(want).epsilon(1e-8));
    // odd interval count exercises the 3/8 tail
    CHECK(quad::integrate_log_nodes(g.r, cubic, 0, 199) ==
          doctest::Approx((std::pow(g.r[199], 4) - 1.0) / 4.0).epsilon(1e-8));
    CHECK(quad::integrate_log_nodes(g.r, cubic, 5, 5) == 0.0);
}

TEST_CASE("derivative stencils on a log grid") {
    const fields::RadialGrid g = fields::log_grid(0.5, 2.0, 101);
    std::vector<double> f(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) f[i] = std::pow(g.r[i], 3.5);
    const std::size_t mid = 50;
    CHECK(quad::deriv_log_nodes(g.r, f, mid, g.log_step) ==
          doctest::Approx(3.5 * std::pow(g.r[mid], 2.5)).epsilon(1e-5));
    const std::vector<double> d1 = quad::deriv1_all(g.r, f, g.log_step);
    const std::vector<double> d2 = quad::deriv2_all(g.r, f, g.log_step);
    CHECK(d1[mid] == doctest::Approx(3.5 * std::pow(g.r[mid], 2.5)).epsilon(1e-5));
    CHECK(d2[mid] == doctest::Approx(3.5 * 2.5 * std::pow(g.r[mid], 1.5)).epsilon(1e-4));
    CHECK_THROWS_AS(quad::deriv_log_nodes(g.r, f, 1, g.log_step), StencilError);
}
