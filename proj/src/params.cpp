// params.cpp

#include "lanelab/params.hpp"

#include <cmath>
#include <sstream>

#include "lanelab/errors.hpp"

namespace lanelab {

SystemParams SystemParams::make(double N, double p, double alpha, double beta) {
    std::ostringstream why;
    if (!(N >= 5.0))
        why << "N = " << N << " must be >= 5";
    else if (!(p > 1.0))
        why << "p = " << p << " must be > 1";
    else if (!(alpha > -4.0))
        why << "alpha = " << alpha << " must be > -4";
    else if (!(beta >= 0.0 && beta <= 0.5 * (N - 4.0)))
        why << "beta = " << beta << " must lie in [0, (N-4)/2] = [0, " << 0.5 * (N - 4.0) << "]";
    if (!why.str().empty()) throw ValidationError("SystemParams: " + why.str());
    return SystemParams{N, p, alpha, beta};
}

DerivedParams derive(const SystemParams& params) {
    const double N = params.N, p = params.p, a = params.alpha, b = params.beta;
    DerivedParams d;
    d.decay_u = (4.0 + a + b) / (p - 1.0);
    d.decay_v = (4.0 + a + b * p) / (p - 1.0);
    d.energy_exp = (8.0 + 2.0 * a + 2.0 * b) / (p - 1.0) + 4.0 + b - N;
    d.singular_coef =
        d.decay_u * (N - 2.0 - d.decay_u) * (d.decay_v + 2.0) * (N - 4.0 - d.decay_v);
    d.mode_coupling = d.decay_u * (N - 2.0 - d.decay_u) + (d.decay_v + 2.0) * (N - 4.0 - d.decay_v);
    d.drift_const = (N - 2.0) * (2.0 + b) + 2.0 * d.decay_u * (N - 4.0 - b - d.decay_u) -
                    b * b / 8.0;
    d.hyperbola_dim = 4.0 + b + 2.0 * d.decay_u;
    d.bracket_hi = 4.0 + b + (4.0 * p + 1.0) * d.decay_u;
    return d;
}

RegimeTag classify_regime(const SystemParams& params, double crit_dim) {
    const DerivedParams d = derive(params);
    if (!(crit_dim > d.hyperbola_dim))
        throw BracketError("classify_regime: crit_dim must exceed the hyperbola dimension");
    if (std::abs(params.N - d.hyperbola_dim) <= 1e-12) return RegimeTag::OnHyperbola;
    if (params.N < d.hyperbola_dim) return RegimeTag::BelowHyperbola;
    if (params.N < crit_dim) return RegimeTag::Window;
    return RegimeTag::AtOrAboveCritDim;
}

std::string regime_name(RegimeTag tag) {
    switch (tag) {
        case RegimeTag::BelowHyperbola: return "BelowHyperbola";
        case RegimeTag::OnHyperbola: return "OnHyperbola";
        case RegimeTag::Window: return "Window";
        case RegimeTag::AtOrAboveCritDim: return "AtOrAboveCritDim";
    }
    return "?";
}

}  // namespace lanelab
