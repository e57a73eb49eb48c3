// fields.hpp -- discrete candidate solutions on a log-radial grid.
//
// A Field is a zonal mode sum u(r,phi) = sum_k f_k(r) Psi_k(phi) with the
// Psi_k L2-normalized on the sphere.  Mode profiles carry value and first
// three radial derivatives; built-in families (power law, bump, shot
// solutions) store analytic derivatives, everything else falls back to
// 4th-order differences on the log grid.
#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "lanelab/params.hpp"

namespace lanelab::fields {

struct RadialGrid {
    std::vector<double> r;
    double log_step = 0.0;

    std::size_t size() const { return r.size(); }
    double r_min() const { return r.front(); }
    double r_max() const { return r.back(); }
    // Node whose radius matches within relative 1e-9; throws RangeError.
    std::size_t index_of(double radius) const;
    // Prefix of the first n nodes (same spacing).
    RadialGrid truncated(std::size_t n) const;
};

// n log-uniform points from r_min to r_max inclusive; n >= 2, 0 < r_min < r_max.
RadialGrid log_grid(double r_min, double r_max, int n);

struct ZonalMode {
    int degree = 0;
    std::vector<double> f, fp, fpp, fppp;
};

// Tag for single-mode fields of the exact form f(r) = amplitude * r^exponent;
// lets ball integrals extend analytically below the grid.
struct PowerLaw {
    double amplitude = 0.0;
    double exponent = 0.0;
};

struct Field {
    SystemParams params{};
    RadialGrid grid;
    std::vector<ZonalMode> modes;
    bool derivatives_analytic = false;
    std::optional<PowerLaw> power_law;

    const ZonalMode* mode(int degree) const;
};

// The explicit singular solution as a k=0 field.  The stored profile is
// scaled by sqrt(sphere area) so that f * Psi_0 reproduces the solution
// pointwise.  Throws GammaNonpositive unless N-2-decay_u > 0 and
// N-4-decay_v > 0.
Field singular_field(const SystemParams& params, const RadialGrid& grid);

struct BumpSpec {
    int degree = 0;
    double amplitude = 1.0;
    double center = 1.0;
    double width = 0.5;
};

// Compactly supported test fields: per entry, amplitude*(1-((r-c)/w)^2)^6 on
// |r-c| <= w.  Entries sharing a degree are summed into one mode.
Field bump_field(const std::vector<BumpSpec>& spec, const SystemParams& params,
                 const RadialGrid& grid);

enum class Termination { ReachedRmax, BlowupDetected };

struct ShootingResult {
    Field field;                    // u-profile, k=0 only
    std::vector<double> v_profile;  // raw companion values on the retained nodes
    double termination_radius = 0.0;
    Termination terminated = Termination::ReachedRmax;
};

// Integrates the radial system outward from r = r_min/4 with series initial
// data u(0)=a, v(0)=b, classical RK4, sampling onto the grid.  Blowup
// (|u|+|v| > 1e12) truncates the grid and is a normal termination.
// step_scale < 1 tightens the step bound (for convergence studies).
// Requires alpha > -2, beta >= 0, grid.r_min() <= 1e-2.
ShootingResult shoot(const SystemParams& params, double a, double b, const RadialGrid& grid,
                     double step_scale = 1.0);

// Companion profile v = -|x|^{-beta} Lap u, mode by mode.  Analytic for
// power-law fields; finite-difference derivatives otherwise.
Field companion_v(const Field& field);

// CSV dump: header row naming mode degrees, 17-significant-digit values,
// '#' metadata comments.  read_field reconstructs the third-derivative
// arrays by differencing (they are not stored).
void dump_field(const Field& field, std::ostream& out,
                const std::vector<std::string>& extra_comments = {});
Field read_field(std::istream& in);

}  // namespace lanelab::fields
