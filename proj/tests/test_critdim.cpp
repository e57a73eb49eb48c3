#include <doctest.h>

#include <cmath>
#include <random>

#include "lanelab/critdim.hpp"
#include "lanelab/errors.hpp"

using namespace lanelab;
using namespace lanelab::critdim;

TEST_CASE("threshold values at hand-computed points") {
    const SystemParams P = SystemParams::make(12, 3, 0, 0);
    const ThresholdValues t12 = threshold_functions(12.0, P);
    CHECK(t12.source == doctest::Approx(1152.0).epsilon(1e-14));      // 24*8*6
    CHECK(t12.hardy == doctest::Approx(576.0).epsilon(1e-14));        // 144*64/16
    CHECK(t12.hardy_grad == doctest::Approx(48.0).epsilon(1e-14));    // 12*8/2
    CHECK(t12.source_grad == doctest::Approx(120.0).epsilon(1e-14));  // 3*4*6+3*2*8 = 3*mode_coupling

    const ThresholdValues t8 = threshold_functions(8.0, P);
    CHECK(t8.source - t8.hardy == doctest::Approx(128.0).epsilon(1e-14));
    // the hardy side vanishes where the second factor does
    const SystemParams Q = SystemParams::make(9, 2, 1, 1);
    const ThresholdValues tz = threshold_functions(4.0 + Q.beta, Q);
    CHECK(tz.hardy == doctest::Approx(0.0));
    CHECK(tz.hardy_grad == doctest::Approx(0.0));
}

TEST_CASE("endpoint gap closed forms at (p=3, alpha=0, beta=0)") {
    const SystemParams P = SystemParams::make(12, 3, 0, 0);
    const EndpointGaps g = endpoint_gaps(P);
    CHECK(g.left_gap == doctest::Approx(128.0).epsilon(1e-14));   // 2*4*16
    CHECK(g.grad_gap == doctest::Approx(32.0).epsilon(1e-14));    // 2*2*2*4... = 32
    CHECK(g.deriv_gap == doctest::Approx(96.0).epsilon(1e-14));   // 2*2*4*6
    const ThresholdValues hi = threshold_functions(30.0, P);
    CHECK(g.right_gap_formula ==
          doctest::Approx(hi.source - hi.hardy).epsilon(1e-12));
    CHECK(g.right_gap_formula == doctest::Approx(14976.0 - 38025.0).epsilon(1e-14));
}

TEST_CASE("critical dimension root and bracket") {
    const SystemParams P = SystemParams::make(12, 3, 0, 0);
    const CritDimResult r = critical_dimension(P);
    CHECK(r.bracket_lo == doctest::Approx(8.0));
    CHECK(r.bracket_hi == doctest::Approx(30.0));
    CHECK(std::abs(r.root - 18.16) <= 0.05);
    CHECK(r.gap_lo > 0.0);
    CHECK(r.gap_hi < 0.0);
    CHECK(r.bracket_lo < r.root);
    CHECK(r.root < r.bracket_hi);
    CHECK(r.scan_points == 4096);
    // the root really is a zero of the threshold gap
    const ThresholdValues t = threshold_functions(r.root, P);
    CHECK(std::abs(t.source - t.hardy) <= 1e-6 * t.hardy);
    CHECK_THROWS_AS(critical_dimension(P, 1e-2), ParameterError);
}

TEST_CASE("published comparison bounds") {
    const CritDimResult r00 = critical_dimension(SystemParams::make(12, 3, 0, 0));
    REQUIRE(r00.cowan.has_value());
    CHECK(*r00.cowan == doctest::Approx(15.995139957).epsilon(1e-9));
    CHECK(r00.root > *r00.cowan);

    const LiteratureBounds f11 = literature_bounds(SystemParams::make(12, 3, 1, 1));
    REQUIRE(f11.fazly.has_value());
    CHECK(*f11.fazly == doctest::Approx(17.0).epsilon(1e-14));  // 8+3+12/2
    CHECK_FALSE(f11.cowan.has_value());

    const LiteratureBounds none = literature_bounds(SystemParams::make(12, 3, 0, 1));
    CHECK_FALSE(none.cowan.has_value());
    CHECK_FALSE(none.fazly.has_value());
}

TEST_CASE("hardy threshold is the square of its gradient companion over 4") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> un(5.0, 50.0), up(1.3, 8.0), ua(-3.0, 4.0),
        ub(0.0, 3.0);
    for (int i = 0; i < 200; ++i) {
        const double N = un(rng);
        const double b = std::min(ub(rng), 0.5 * (N - 4.0));
        const SystemParams P = SystemParams::make(N, up(rng), ua(rng), b);
        const ThresholdValues t = threshold_functions(un(rng), P);
        CHECK(t.hardy ==
              doctest::Approx(0.25 * t.hardy_grad * t.hardy_grad).epsilon(1e-14));
    }
}

TEST_CASE("printed quartic transcription gap") {
    // weightless case: the published quartic matches the closed forms exactly
    const SystemParams P0 = SystemParams::make(12, 3, 0, 0);
    for (double y : {6.0, 10.0, 18.0, 25.0})
        CHECK(printed_quartic_gap(P0, y) == doctest::Approx(0.0).epsilon(1e-9));
    // with a weight on the v-equation the published y-coefficient is off by
    // exactly 16 b (b+4) (p-1)^4
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> up(1.3, 6.0), ua(-2.0, 3.0), ub(0.0, 3.0),
        uy(5.0, 40.0);
    for (int i = 0; i < 100; ++i) {
        const double p = up(rng), a = ua(rng), b = ub(rng), y = uy(rng);
        const SystemParams P = SystemParams::make(std::max(5.0, 5.0 + 2.0 * b), p, a, b);
        const double gap = printed_quartic_gap(P, y);
        const double expected = -16.0 * b * (b + 4.0) * std::pow(p - 1.0, 4) * y;
        CHECK(gap == doctest::Approx(expected).epsilon(1e-9));
    }
}
