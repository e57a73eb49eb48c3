// params.hpp -- system parameters and the closed-form derived constants.
//
// The system under study is
//     -Lap u = |x|^beta v,   -Lap v = |x|^alpha |u|^{p-1} u     in R^N,
// with N >= 5, p > 1, alpha > -4, 0 <= beta <= (N-4)/2.  N is treated as a
// real variable: every derived quantity extends to real N and the critical
// dimension is the root of an algebraic equation in N.
#pragma once

#include <string>

namespace lanelab {

struct SystemParams {
    double N;      // space dimension (real, >= 5)
    double p;      // nonlinearity exponent (> 1)
    double alpha;  // weight exponent on the u-equation (> -4)
    double beta;   // weight exponent on the v-equation (in [0, (N-4)/2])

    // Validating constructor; throws ValidationError outside the ranges.
    static SystemParams make(double N, double p, double alpha, double beta);
};

struct DerivedParams {
    double decay_u;        // radial decay rate of the singular profile, (4+alpha+beta)/(p-1)
    double decay_v;        // shifted rate entering the companion profile, (4+alpha+beta*p)/(p-1)
    double energy_exp;     // scaling exponent of the windowed energy, 2*decay_u + 4 + beta - N
    double singular_coef;  // coefficient of the explicit singular solution
    double mode_coupling;  // angular-gradient coupling of the linearized operator
    double drift_const;    // constant in the monotonicity derivative lower bound
    double hyperbola_dim;  // weighted critical hyperbola dimension, 4 + beta + 2*decay_u
    double bracket_hi;     // right endpoint of the critical-dimension bracket
};

enum class RegimeTag { BelowHyperbola, OnHyperbola, Window, AtOrAboveCritDim };

std::string regime_name(RegimeTag tag);

// All fields by direct evaluation of the closed forms.
DerivedParams derive(const SystemParams& params);

// Classifies N against the hyperbola dimension and the critical dimension.
// Ties with the hyperbola resolve within absolute tolerance 1e-12 on N.
// Throws BracketError when crit_dim <= hyperbola dimension.
RegimeTag classify_regime(const SystemParams& params, double crit_dim);

}  // namespace lanelab
