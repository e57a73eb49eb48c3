#include <doctest.h>

#include <random>

#include "lanelab/critdim.hpp"
#include "lanelab/errors.hpp"
#include "lanelab/params.hpp"

using namespace lanelab;

TEST_CASE("parameter validation") {
    CHECK_NOTHROW(SystemParams::make(5, 1.5, -3.9, 0.5));
    CHECK_THROWS_AS(SystemParams::make(4.9, 2, 0, 0), ValidationError);
    CHECK_THROWS_AS(SystemParams::make(12, 1.0, 0, 0), ValidationError);
    CHECK_THROWS_AS(SystemParams::make(12, 3, -4.0, 0), ValidationError);
    CHECK_THROWS_AS(SystemParams::make(12, 3, 0, -0.1), ValidationError);
    CHECK_THROWS_AS(SystemParams::make(12, 3, 0, 4.1), ValidationError);  // (N-4)/2 = 4
    CHECK_NOTHROW(SystemParams::make(12, 3, 0, 4.0));
}

TEST_CASE("derived constants at (N=12, p=3, alpha=0, beta=0)") {
    const DerivedParams d = derive(SystemParams::make(12, 3, 0, 0));
    CHECK(d.decay_u == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(d.decay_v == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(d.energy_exp == doctest::Approx(-4.0).epsilon(1e-15));
    CHECK(d.singular_coef == doctest::Approx(384.0).epsilon(1e-15));  // 2*8*4*6
    CHECK(d.mode_coupling == doctest::Approx(40.0).epsilon(1e-15));   // 16+24
    CHECK(d.drift_const == doctest::Approx(44.0).epsilon(1e-15));     // 10*2+4*6
    CHECK(d.hyperbola_dim == doctest::Approx(8.0).epsilon(1e-15));
    CHECK(d.bracket_hi == doctest::Approx(30.0).epsilon(1e-15));      // 4+13*2
}

TEST_CASE("derived identities hold for random tuples") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> un(5.0, 40.0), up(1.25, 9.0), ua(-3.5, 4.0);
    for (int i = 0; i < 300; ++i) {
        const double N = un(rng);
        std::uniform_real_distribution<double> ub(0.0, 0.5 * (N - 4.0));
        const SystemParams P = SystemParams::make(N, up(rng), ua(rng), ub(rng));
        const DerivedParams d = derive(P);
        CHECK(d.energy_exp ==
              doctest::Approx(2.0 * d.decay_u + 4.0 + P.beta - P.N).epsilon(1e-14));
        CHECK(d.decay_v - d.decay_u == doctest::Approx(P.beta).epsilon(1e-13));
    }
}

TEST_CASE("regime classification") {
    const double crit = critdim::critical_dimension(SystemParams::make(12, 3, 0, 0)).root;
    CHECK(classify_regime(SystemParams::make(7, 3, 0, 0), crit) == RegimeTag::BelowHyperbola);
    CHECK(classify_regime(SystemParams::make(8, 3, 0, 0), crit) == RegimeTag::OnHyperbola);
    CHECK(classify_regime(SystemParams::make(12, 3, 0, 0), crit) == RegimeTag::Window);
    CHECK(classify_regime(SystemParams::make(19, 3, 0, 0), crit) ==
          RegimeTag::AtOrAboveCritDim);
    // within the 1e-12 boundary tolerance
    CHECK(classify_regime(SystemParams::make(8.0 + 5e-13, 3, 0, 0), crit) ==
          RegimeTag::OnHyperbola);
    CHECK_THROWS_AS(classify_regime(SystemParams::make(12, 3, 0, 0), 7.0), BracketError);
}
