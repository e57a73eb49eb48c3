#include <doctest.h>

#include <random>

#include "lanelab/errors.hpp"
#include "lanelab/identities.hpp"

using namespace lanelab;
using namespace lanelab::identities;

namespace {

MultiPoly var(int i) {
    MultiPoly::Monomial e{};
    e[i] = 1;
    return MultiPoly::monomial(3, e, 1.0);
}

}  // namespace

TEST_CASE("polynomial calculus basics") {
    const MultiPoly x1 = var(0);
    const MultiPoly p = x1 * x1;  // x1^2
    const PolyCalculus pc = poly_calculus(p);
    CHECK(pc.gradient[0].terms().size() == 1);
    CHECK(pc.gradient[0].terms().begin()->second == 2.0);
    CHECK(pc.gradient[1].is_zero());
    REQUIRE(pc.laplacian.terms().size() == 1);
    CHECK(pc.laplacian.terms().begin()->second == 2.0);

    const MultiPoly mixed = var(0) * var(1);  // harmonic monomial
    CHECK(mixed.laplacian().is_zero());

    const MultiPoly x4 = x1 * x1 * x1 * x1;
    const MultiPoly lap = x4.laplacian();  // 12 x1^2
    REQUIRE(lap.terms().size() == 1);
    CHECK(lap.terms().begin()->second == 12.0);
    CHECK(lap.degree() == 2);
}

TEST_CASE("degree bound enforced") {
    MultiPoly big = var(0);
    for (int i = 0; i < 4; ++i) big = big * big;  // degree 16
    CHECK_THROWS_AS(big * big, DegreeOverflow);
}

TEST_CASE("pointwise identity on hand examples") {
    CHECK(product_identity_gap(var(0), var(1)).is_zero());
    const MultiPoly z = var(0) * var(0);
    CHECK(product_identity_gap(z, var(0)).is_zero());
    // the two sides individually are 24 x1^2
    const MultiPoly lhs = z.laplacian() * (z * var(0) * var(0)).laplacian();
    REQUIRE(lhs.terms().size() == 1);
    CHECK(lhs.terms().begin()->second == 24.0);
}

TEST_CASE("pointwise identity on random integer polynomials") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> coef(-5, 5), expo(0, 4), nterms(2, 6);
    auto random_poly = [&]() {
        MultiPoly p(3);
        const int t = nterms(rng);
        for (int i = 0; i < t; ++i) {
            MultiPoly::Monomial e{};
            int total = 5;
            while (total > 4) {
                e = {expo(rng), expo(rng), expo(rng), 0};
                total = e[0] + e[1] + e[2];
            }
            p = p + MultiPoly::monomial(3, e, double(coef(rng)));
        }
        return p;
    };
    for (int i = 0; i < 100; ++i) CHECK(product_identity_gap(random_poly(), random_poly()).is_zero());
}

TEST_CASE("weighted integral identities in the radial setting") {
    for (const auto& [N, beta] :
         std::vector<std::pair<double, double>>{{12, 0}, {12, 2}, {9, 1}}) {
        const SystemParams P = SystemParams::make(N, 3.0, 0.0, beta);
        for (const std::vector<double>& zc :
             std::vector<std::vector<double>>{{1.0}, {0.0, 1.0}, {0.0, 0.0, 1.0}}) {
            const RadialIdentityReport res = radial_identity_residuals(zc, P);
            CAPTURE(N);
            CAPTURE(beta);
            CHECK(res.bilaplacian_pairing.relative <= 1e-8);
            CHECK(res.gradient_product.relative <= 1e-8);
        }
    }
}

TEST_CASE("zero test function gives exactly balanced identities") {
    const SystemParams P = SystemParams::make(12, 3, 0, 0);
    const RadialIdentityReport res = radial_identity_residuals({0.0}, P, 201);
    CHECK(res.bilaplacian_pairing.lhs == 0.0);
    CHECK(res.bilaplacian_pairing.rhs == 0.0);
    CHECK(res.gradient_product.residual == 0.0);
}

TEST_CASE("integral identity residual shrinks at the quadrature order") {
    const SystemParams P = SystemParams::make(12, 3, 0, 2);
    const RadialIdentityReport coarse = radial_identity_residuals({0.0, 1.0}, P, 201);
    const RadialIdentityReport fine = radial_identity_residuals({0.0, 1.0}, P, 401);
    CHECK(coarse.bilaplacian_pairing.relative / std::max(fine.bilaplacian_pairing.relative, 1e-300) >= 8.0);
}
