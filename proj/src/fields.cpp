// fields.cpp

#include "lanelab/fields.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "lanelab/errors.hpp"
#include "lanelab/quadrature.hpp"

namespace lanelab::fields {

std::size_t RadialGrid::index_of(double radius) const {
    if (r.empty()) throw RangeError("index_of: empty grid");
    if (!(radius > 0.0)) throw RangeError("index_of: radius must be positive");
    const double pos = std::log(radius / r.front()) / log_step;
    const long idx = std::lround(pos);
    if (idx < 0 || idx >= long(r.size()))
        throw RangeError("index_of: radius outside the grid");
    if (std::abs(r[idx] - radius) > 1e-9 * radius)
        throw RangeError("index_of: radius does not coincide with a grid node");
    return std::size_t(idx);
}

RadialGrid RadialGrid::truncated(std::size_t n) const {
    RadialGrid out;
    out.r.assign(r.begin(), r.begin() + std::min(n, r.size()));
    out.log_step = log_step;
    return out;
}

RadialGrid log_grid(double r_min, double r_max, int n) {
    if (!(r_min > 0.0) || !(r_max > r_min))
        throw RangeError("log_grid: need 0 < r_min < r_max");
    if (n < 2) throw RangeError("log_grid: need n >= 2");
    RadialGrid g;
    g.r.resize(n);
    g.log_step = (std::log(r_max) - std::log(r_min)) / (n - 1);
    const double s0 = std::log(r_min);
    for (int i = 0; i < n; ++i) g.r[i] = std::exp(s0 + i * g.log_step);
    g.r.front() = r_min;
    g.r.back() = r_max;
    return g;
}

const ZonalMode* Field::mode(int degree) const {
    for (const ZonalMode& m : modes)
        if (m.degree == degree) return &m;
    return nullptr;
}

Field singular_field(const SystemParams& params, const RadialGrid& grid) {
    const DerivedParams d = derive(params);
    if (!(params.N - 2.0 - d.decay_u > 0.0) || !(params.N - 4.0 - d.decay_v > 0.0))
        throw GammaNonpositive("singular_field: coefficient not positive for these parameters");
    const double amp = std::pow(d.singular_coef, 1.0 / (params.p - 1.0)) *
                       std::sqrt(quad::sphere_area(params.N));
    const double e = -d.decay_u;

    Field field;
    field.params = params;
    field.grid = grid;
    field.derivatives_analytic = true;
    field.power_law = PowerLaw{amp, e};
    ZonalMode m;
    m.degree = 0;
    const std::size_t n = grid.size();
    m.f.resize(n);
    m.fp.resize(n);
    m.fpp.resize(n);
    m.fppp.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double r = grid.r[i];
        const double v = amp * std::pow(r, e);
        m.f[i] = v;
        m.fp[i] = e * v / r;
        m.fpp[i] = e * (e - 1.0) * v / (r * r);
        m.fppp[i] = e * (e - 1.0) * (e - 2.0) * v / (r * r * r);
    }
    field.modes.push_back(std::move(m));
    return field;
}

Field bump_field(const std::vector<BumpSpec>& spec, const SystemParams& params,
                 const RadialGrid& grid) {
    Field field;
    field.params = params;
    field.grid = grid;
    field.derivatives_analytic = true;
    const std::size_t n = grid.size();

    std::map<int, ZonalMode> by_degree;
    for (const BumpSpec& b : spec) {
        if (!(b.width > 0.0)) throw ParameterError("bump_field: width must be positive");
        if (b.degree < 0) throw ParameterError("bump_field: degree must be >= 0");
        ZonalMode& m = by_degree[b.degree];
        if (m.f.empty()) {
            m.degree = b.degree;
            m.f.assign(n, 0.0);
            m.fp.assign(n, 0.0);
            m.fpp.assign(n, 0.0);
            m.fppp.assign(n, 0.0);
        }
        for (std::size_t i = 0; i < n; ++i) {
            const double r = grid.r[i];
            if (std::abs(r - b.center) > b.width) continue;
            const double x = (r - b.center) / b.width;
            const double q = 1.0 - x * x;
            const double qp = -2.0 * (r - b.center) / (b.width * b.width);
            const double qpp = -2.0 / (b.width * b.width);
            const double q3 = q * q * q, q4 = q3 * q, q5 = q4 * q, q6 = q5 * q;
            m.f[i] += b.amplitude * q6;
            m.fp[i] += b.amplitude * 6.0 * q5 * qp;
            m.fpp[i] += b.amplitude * (30.0 * q4 * qp * qp + 6.0 * q5 * qpp);
            m.fppp[i] += b.amplitude * (120.0 * q3 * qp * qp * qp + 90.0 * q4 * qp * qpp);
        }
    }
    for (auto& [deg, m] : by_degree) field.modes.push_back(std::move(m));
    return field;
}

namespace {

inline double sgnpow(double u, double p) {
    // |u|^{p-1} u
    if (u == 0.0) return 0.0;
    return std::copysign(std::pow(std::abs(u), p), u);
}

struct OdeState {
    double u, up, v, vp;
};

OdeState rhs(const OdeState& y, double r, double N, double p, double alpha, double beta) {
    OdeState d;
    d.u = y.up;
    d.up = -(N - 1.0) / r * y.up - std::pow(r, beta) * y.v;
    d.v = y.vp;
    d.vp = -(N - 1.0) / r * y.vp - std::pow(r, alpha) * sgnpow(y.u, p);
    return d;
}

OdeState rk4_step(const OdeState& y, double r, double h, double N, double p, double alpha,
                  double beta) {
    auto add = [](const OdeState& a, const OdeState& b, double s) {
        return OdeState{a.u + s * b.u, a.up + s * b.up, a.v + s * b.v, a.vp + s * b.vp};
    };
    const OdeState k1 = rhs(y, r, N, p, alpha, beta);
    const OdeState k2 = rhs(add(y, k1, 0.5 * h), r + 0.5 * h, N, p, alpha, beta);
    const OdeState k3 = rhs(add(y, k2, 0.5 * h), r + 0.5 * h, N, p, alpha, beta);
    const OdeState k4 = rhs(add(y, k3, h), r + h, N, p, alpha, beta);
    OdeState out = y;
    out.u += h / 6.0 * (k1.u + 2.0 * k2.u + 2.0 * k3.u + k4.u);
    out.up += h / 6.0 * (k1.up + 2.0 * k2.up + 2.0 * k3.up + k4.up);
    out.v += h / 6.0 * (k1.v + 2.0 * k2.v + 2.0 * k3.v + k4.v);
    out.vp += h / 6.0 * (k1.vp + 2.0 * k2.vp + 2.0 * k3.vp + k4.vp);
    return out;
}

}  // namespace

ShootingResult shoot(const SystemParams& params, double a, double b, const RadialGrid& grid,
                     double step_scale) {
    const double N = params.N, p = params.p, alpha = params.alpha, beta = params.beta;
    if (!(alpha > -2.0))
        throw ParameterError("shoot: the series start at 0 requires alpha > -2");
    if (!(grid.r_min() <= 1e-2)) throw ParameterError("shoot: grid must start at r <= 1e-2");
    if (!(step_scale > 0.0 && step_scale <= 1.0))
        throw ParameterError("shoot: step_scale must lie in (0,1]");

    const double blowup_limit = 1e12;
    const double r0 = grid.r_min() / 4.0;
    const double sa = sgnpow(a, p);
    OdeState y;
    y.u = a - b * std::pow(r0, beta + 2.0) / ((beta + 2.0) * (beta + N));
    y.up = -b * std::pow(r0, beta + 1.0) / (beta + N);
    y.v = b - sa * std::pow(r0, alpha + 2.0) / ((alpha + 2.0) * (alpha + N));
    y.vp = -sa * std::pow(r0, alpha + 1.0) / (alpha + N);

    const std::size_t n = grid.size();
    std::vector<double> u(n), up(n), upp(n), uppp(n), v(n);
    std::size_t reached = 0;
    bool blew_up = false;

    double r = r0;
    for (std::size_t i = 0; i < n && !blew_up; ++i) {
        const double target = grid.r[i];
        const double spacing =
            (i + 1 < n) ? grid.r[i + 1] - grid.r[i] : grid.r[i] - grid.r[i - 1];
        while (r < target) {
            const double cap = step_scale * std::min(spacing, r / 64.0);
            const bool last = cap >= target - r;
            const double h = last ? target - r : cap;
            y = rk4_step(y, r, h, N, p, alpha, beta);
            r = last ? target : r + h;  // land on the node exactly
            if (std::abs(y.u) + std::abs(y.v) > blowup_limit) {
                blew_up = true;
                break;
            }
        }
        if (blew_up) break;
        u[i] = y.u;
        up[i] = y.up;
        const OdeState d = rhs(y, target, N, p, alpha, beta);
        upp[i] = d.up;
        uppp[i] = -(N - 1.0) * (d.up / target - y.up / (target * target)) -
                  (beta == 0.0 ? 0.0 : beta * std::pow(target, beta - 1.0) * y.v) -
                  std::pow(target, beta) * y.vp;
        v[i] = y.v;
        reached = i + 1;
    }
    if (reached == 0) throw Error("shoot: blowup before the first grid node");

    ShootingResult result;
    result.terminated = blew_up ? Termination::BlowupDetected : Termination::ReachedRmax;
    result.field.params = params;
    result.field.grid = grid.truncated(reached);
    result.field.derivatives_analytic = true;
    result.termination_radius = result.field.grid.r_max();

    const double scale = std::sqrt(quad::sphere_area(N));
    ZonalMode m;
    m.degree = 0;
    m.f.assign(u.begin(), u.begin() + reached);
    m.fp.assign(up.begin(), up.begin() + reached);
    m.fpp.assign(upp.begin(), upp.begin() + reached);
    m.fppp.assign(uppp.begin(), uppp.begin() + reached);
    for (std::size_t i = 0; i < reached; ++i) {
        m.f[i] *= scale;
        m.fp[i] *= scale;
        m.fpp[i] *= scale;
        m.fppp[i] *= scale;
    }
    result.field.modes.push_back(std::move(m));
    result.v_profile.assign(v.begin(), v.begin() + reached);
    return result;
}

Field companion_v(const Field& field) {
    const double N = field.params.N, beta = field.params.beta;
    Field out;
    out.params = field.params;
    out.grid = field.grid;
    const std::size_t n = field.grid.size();

    if (field.power_law && field.modes.size() == 1 && field.modes[0].degree == 0) {
        const double A = field.power_law->amplitude;
        const double e = field.power_law->exponent;
        const double Av = -A * e * (e + N - 2.0);
        const double ev = e - 2.0 - beta;
        out.derivatives_analytic = true;
        out.power_law = PowerLaw{Av, ev};
        ZonalMode m;
        m.degree = 0;
        m.f.resize(n);
        m.fp.resize(n);
        m.fpp.resize(n);
        m.fppp.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            const double r = field.grid.r[i];
            const double val = Av * std::pow(r, ev);
            m.f[i] = val;
            m.fp[i] = ev * val / r;
            m.fpp[i] = ev * (ev - 1.0) * val / (r * r);
            m.fppp[i] = ev * (ev - 1.0) * (ev - 2.0) * val / (r * r * r);
        }
        out.modes.push_back(std::move(m));
        return out;
    }

    out.derivatives_analytic = false;
    for (const ZonalMode& m : field.modes) {
        const double nu = double(m.degree) * (double(m.degree) + N - 2.0);
        ZonalMode vm;
        vm.degree = m.degree;
        vm.f.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            const double r = field.grid.r[i];
            vm.f[i] = -std::pow(r, -beta) *
                      (m.fpp[i] + (N - 1.0) / r * m.fp[i] - nu / (r * r) * m.f[i]);
        }
        vm.fp = quad::deriv1_all(field.grid.r, vm.f, field.grid.log_step);
        vm.fpp = quad::deriv2_all(field.grid.r, vm.f, field.grid.log_step);
        vm.fppp = quad::deriv1_all(field.grid.r, vm.fpp, field.grid.log_step);
        out.modes.push_back(std::move(vm));
    }
    return out;
}

// ------------------------------------------------------------------ CSV

namespace {

std::string num17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.16e", x);
    return buf;
}

}  // namespace

void dump_field(const Field& field, std::ostream& out,
                const std::vector<std::string>& extra_comments) {
    out << "# lanelab-field N=" << num17(field.params.N) << " p=" << num17(field.params.p)
        << " alpha=" << num17(field.params.alpha) << " beta=" << num17(field.params.beta)
        << " analytic=" << (field.derivatives_analytic ? 1 : 0);
    if (field.power_law)
        out << " power_amp=" << num17(field.power_law->amplitude)
            << " power_exp=" << num17(field.power_law->exponent);
    out << "\n";
    for (const std::string& c : extra_comments) out << "# " << c << "\n";
    out << "r";
    for (const ZonalMode& m : field.modes)
        out << ",f_k" << m.degree << ",fp_k" << m.degree << ",fpp_k" << m.degree;
    out << "\n";
    for (std::size_t i = 0; i < field.grid.size(); ++i) {
        out << num17(field.grid.r[i]);
        for (const ZonalMode& m : field.modes)
            out << "," << num17(m.f[i]) << "," << num17(m.fp[i]) << "," << num17(m.fpp[i]);
        out << "\n";
    }
}

Field read_field(std::istream& in) {
    std::string line;
    std::map<std::string, double> meta;
    std::vector<int> degrees;
    bool have_header = false;
    Field field;
    std::vector<std::vector<double>> cols;

    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        if (line[0] == '#') {
            std::istringstream ss(line.substr(1));
            std::string tok;
            while (ss >> tok) {
                const std::size_t eq = tok.find('=');
                if (eq == std::string::npos) continue;
                try {
                    meta[tok.substr(0, eq)] = std::stod(tok.substr(eq + 1));
                } catch (...) {
                }
            }
            continue;
        }
        if (!have_header) {
            std::istringstream ss(line);
            std::string cell;
            bool first = true;
            while (std::getline(ss, cell, ',')) {
                if (first) {
                    if (cell != "r") throw ParseError(line_no, "expected leading column 'r'");
                    first = false;
                    continue;
                }
                if (cell.rfind("f_k", 0) == 0) degrees.push_back(std::stoi(cell.substr(3)));
            }
            if (degrees.empty()) throw ParseError(line_no, "no mode columns in header");
            cols.assign(1 + 3 * degrees.size(), {});
            have_header = true;
            continue;
        }
        std::istringstream ss(line);
        std::string cell;
        std::size_t c = 0;
        while (std::getline(ss, cell, ',')) {
            if (c >= cols.size()) throw ParseError(line_no, "too many columns");
            cols[c++].push_back(std::stod(cell));
        }
        if (c != cols.size()) throw ParseError(line_no, "missing columns");
    }
    if (!have_header || cols[0].size() < 2) throw ParseError(line_no, "no data rows");

    field.params = SystemParams::make(meta.at("N"), meta.at("p"), meta.at("alpha"),
                                      meta.at("beta"));
    field.derivatives_analytic = meta.count("analytic") && meta.at("analytic") != 0.0;
    if (meta.count("power_amp"))
        field.power_law = PowerLaw{meta.at("power_amp"), meta.at("power_exp")};
    field.grid.r = cols[0];
    field.grid.log_step = std::log(field.grid.r[1] / field.grid.r[0]);
    for (std::size_t k = 0; k < degrees.size(); ++k) {
        ZonalMode m;
        m.degree = degrees[k];
        m.f = cols[1 + 3 * k];
        m.fp = cols[2 + 3 * k];
        m.fpp = cols[3 + 3 * k];
        m.fppp = quad::deriv1_all(field.grid.r, m.fpp, field.grid.log_step);
        field.modes.push_back(std::move(m));
    }
    return field;
}

}  // namespace lanelab::fields
