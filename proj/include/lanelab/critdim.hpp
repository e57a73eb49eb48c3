// critdim.hpp -- the critical stability dimension.
//
// Two polynomial thresholds in the dimension N are compared: the strength of
// the linearized source term at the explicit singular solution, and the
// weighted Hardy-Rellich constant.  The singular solution is stable exactly
// when the source threshold does not exceed the Hardy-Rellich one; the
// critical dimension is the least root of their difference inside an
// explicit bracket, located by sign scan plus bisection.
#pragma once

#include <optional>

#include "lanelab/params.hpp"

namespace lanelab::critdim {

struct ThresholdValues {
    double source;        // p * (singular-solution coefficient), quartic in N
    double source_grad;   // gradient-coupling companion, quadratic in N
    double hardy;         // Hardy-Rellich constant (N+beta)^2 (N-4-beta)^2 / 16
    double hardy_grad;    // its gradient-term companion (N+beta)(N-4-beta)/2
    double source_dN;     // d/dN of source
    double hardy_dN;      // d/dN of hardy
};

ThresholdValues threshold_functions(double N, const SystemParams& params);

// Closed forms for the threshold gaps at the two bracket endpoints.
struct EndpointGaps {
    double left_gap;           // (source - hardy) at the hyperbola dimension
    double right_gap_formula;  // (source - hardy) at the right bracket endpoint
    double grad_gap;           // (source_grad - hardy_grad) at the hyperbola dimension
    double deriv_gap;          // (source_dN - hardy_dN) at the hyperbola dimension
};

EndpointGaps endpoint_gaps(const SystemParams& params);

struct CritDimResult {
    double bracket_lo = 0.0;
    double bracket_hi = 0.0;
    double root = 0.0;
    double gap_lo = 0.0;  // source - hardy at bracket_lo (must be > 0)
    double gap_hi = 0.0;  // source - hardy at bracket_hi (must be < 0)
    int scan_points = 0;
    int bisections = 0;
    std::optional<double> cowan;  // comparison bound, alpha = beta = 0 only
    std::optional<double> fazly;  // comparison bound, alpha = beta only
};

// Least root of source(N) - hardy(N) in the bracket: 4096-point scan for the
// first + to - sign change, then bisection to relative width rel_tol.
// Throws BracketError on wrong endpoint signs, NoRootError if no crossing.
CritDimResult critical_dimension(const SystemParams& params, double rel_tol = 1e-12);

struct LiteratureBounds {
    std::optional<double> cowan;
    std::optional<double> fazly;
};

LiteratureBounds literature_bounds(const SystemParams& params);

// Difference between the published quartic form of the threshold equation
// (coefficients transcribed verbatim) and 16 (p-1)^4 (hardy - source) at y.
// A transcription diagnostic, not part of the root computation.
double printed_quartic_gap(const SystemParams& params, double y);

}  // namespace lanelab::critdim
