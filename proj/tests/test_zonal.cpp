#include <doctest.h>

#include <cmath>

#include "lanelab/quadrature.hpp"
#include "lanelab/zonal.hpp"

using namespace lanelab;
using namespace lanelab::zonal;

TEST_CASE("gegenbauer recurrence against closed forms") {
    const double lam = 2.5, t = 0.3;
    CHECK(gegenbauer(0, lam, t) == 1.0);
    CHECK(gegenbauer(1, lam, t) == doctest::Approx(2.0 * lam * t).epsilon(1e-15));
    CHECK(gegenbauer(2, lam, t) ==
          doctest::Approx(2.0 * lam * (lam + 1.0) * t * t - lam).epsilon(1e-14));
}

TEST_CASE("zonal basis is orthonormal under the angular rule") {
    const AngularRule rule(12.0, 256);
    const ZonalBasis basis(12.0, 5, rule);
    std::vector<double> prod(rule.t.size());
    for (int k = 0; k <= 5; ++k)
        for (int j = 0; j <= 5; ++j) {
            for (std::size_t q = 0; q < prod.size(); ++q)
                prod[q] = basis.value(k)[q] * basis.value(j)[q];
            const double ip = rule.integrate(prod);
            if (k == j)
                CHECK(ip == doctest::Approx(1.0).epsilon(1e-13));
            else
                CHECK(std::abs(ip) <= 1e-10);
        }
}

TEST_CASE("beltrami action reproduces the eigenvalue") {
    for (double N : {5.0, 8.5, 12.0}) {
        const AngularRule rule(N, 256);
        const ZonalBasis basis(N, 5, rule);
        for (int k = 0; k <= 5; ++k) {
            CHECK(basis.eigenvalue(k) == doctest::Approx(k * (k + N - 2.0)).epsilon(1e-15));
            for (std::size_t q = 0; q < rule.t.size(); q += 17) {
                const double want = -basis.eigenvalue(k) * basis.value(k)[q];
                if (std::abs(want) > 1e-8)
                    CHECK(basis.beltrami(k)[q] == doctest::Approx(want).epsilon(1e-8));
            }
        }
    }
}

TEST_CASE("sphere moments") {
    CHECK(sphere_moment(12.0, 0, 2.0) == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(sphere_moment(12.0, 1, 2.0) == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(sphere_moment(9.5, 3, 2.0) == doctest::Approx(1.0).epsilon(1e-13));
    const double area = quad::sphere_area(12.0);
    CHECK(sphere_moment(12.0, 0, 4.0) == doctest::Approx(1.0 / area).epsilon(1e-13));
}
