// cli.cpp

#include "lanelab/cli.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "lanelab/critdim.hpp"
#include "lanelab/errors.hpp"
#include "lanelab/fields.hpp"
#include "lanelab/functionals.hpp"
#include "lanelab/params.hpp"
#include "lanelab/verify.hpp"

namespace lanelab::cli {

namespace {

int default_jobs() {
    if (const char* env = std::getenv("LLAB_JOBS")) {
        const int j = std::atoi(env);
        if (j >= 1) return j;
    }
    return 1;
}

std::string critdim_fields(const csvio::SweepRow& row, double rel_tol = 1e-12) {
    // bracket_lo,bracket_hi,n_crit,cowan,fazly with empties where undefined
    const double n_ref = std::max(5.0, 5.0 + 2.0 * row.beta);
    std::ostringstream out;
    try {
        const SystemParams P = SystemParams::make(n_ref, row.p, row.alpha, row.beta);
        try {
            const critdim::CritDimResult r = critdim::critical_dimension(P, rel_tol);
            out << csvio::num(r.bracket_lo) << "," << csvio::num(r.bracket_hi) << ","
                << csvio::num(r.root) << "," << csvio::num(r.cowan) << ","
                << csvio::num(r.fazly);
        } catch (const BracketError&) {
            // outside the usable regime: brackets still well-defined, root absent
            const DerivedParams d = derive(P);
            const critdim::LiteratureBounds lb = critdim::literature_bounds(P);
            out << csvio::num(d.hyperbola_dim) << "," << csvio::num(d.bracket_hi) << ",,"
                << csvio::num(lb.cowan) << "," << csvio::num(lb.fazly);
        }
    } catch (const ValidationError&) {
        out << ",,,,";
    }
    return out.str();
}

std::string regime_field(const csvio::SweepRow& row, double N) {
    try {
        const SystemParams P = SystemParams::make(N, row.p, row.alpha, row.beta);
        const critdim::CritDimResult r = critdim::critical_dimension(P);
        return regime_name(classify_regime(P, r.root));
    } catch (const Error&) {
        return "invalid";
    }
}

fields::RadialGrid make_grid(double r_min, double r_max, int points) {
    return fields::log_grid(r_min, r_max, points);
}

std::vector<fields::BumpSpec> parse_modes(const std::string& spec) {
    std::vector<fields::BumpSpec> out;
    std::istringstream ss(spec);
    std::string group;
    while (std::getline(ss, group, ',')) {
        fields::BumpSpec b;
        if (std::sscanf(group.c_str(), "%d:%lf:%lf:%lf", &b.degree, &b.amplitude, &b.center,
                        &b.width) != 4)
            throw ParameterError("--modes expects k:amplitude:center:width groups");
        out.push_back(b);
    }
    if (out.empty()) throw ParameterError("--modes parsed no groups");
    return out;
}

void write_text(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error("cannot open output file: " + path);
    f << text;
}

}  // namespace

std::string sweep_to_string(const std::vector<csvio::SweepRow>& rows,
                            const std::vector<double>& n_values, int jobs) {
    const bool with_n = !n_values.empty();
    std::ostringstream out;
    out << (with_n ? "p,alpha,beta,N,regime,bracket_lo,bracket_hi,n_crit,cowan,fazly"
                   : "p,alpha,beta,bracket_lo,bracket_hi,n_crit,cowan,fazly")
        << "\n";

    std::vector<std::string> blocks(rows.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= rows.size()) return;
            const csvio::SweepRow& row = rows[i];
            const std::string prefix = csvio::num(row.p) + "," + csvio::num(row.alpha) + "," +
                                       csvio::num(row.beta);
            const std::string cd = critdim_fields(row);
            std::ostringstream block;
            if (with_n) {
                for (double N : n_values)
                    block << prefix << "," << csvio::num(N) << "," << regime_field(row, N)
                          << "," << cd << "\n";
            } else {
                block << prefix << "," << cd << "\n";
            }
            blocks[i] = block.str();
        }
    };
    const int nthreads = std::max(1, std::min<int>(jobs, int(rows.size())));
    if (nthreads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    for (const std::string& b : blocks) out << b;
    return out.str();
}

int run(const std::vector<std::string>& argv) {
    CLI::App app{"numerical laboratory for the weighted fourth-order system"};
    app.require_subcommand(1);

    // ---- critdim
    auto* cmd_critdim = app.add_subcommand("critdim", "critical dimension for one (p,alpha,beta)");
    double cd_p = 0, cd_alpha = 0, cd_beta = 0, cd_tol = 1e-12;
    cmd_critdim->add_option("--p", cd_p)->required();
    cmd_critdim->add_option("--alpha", cd_alpha)->required();
    cmd_critdim->add_option("--beta", cd_beta)->required();
    cmd_critdim->add_option("--tol", cd_tol);

    // ---- classify
    auto* cmd_classify = app.add_subcommand("classify", "regime tag plus derived constants");
    double cl_N = 0, cl_p = 0, cl_alpha = 0, cl_beta = 0;
    cmd_classify->add_option("--N", cl_N)->required();
    cmd_classify->add_option("--p", cl_p)->required();
    cmd_classify->add_option("--alpha", cl_alpha)->required();
    cmd_classify->add_option("--beta", cl_beta)->required();

    // ---- monotone
    auto* cmd_mono = app.add_subcommand("monotone", "monotonicity curve to CSV");
    double mo_N = 0, mo_p = 0, mo_alpha = 0, mo_beta = 0, mo_a = 1.0, mo_b = 0.1;
    double mo_rmin = 0, mo_rmax = 0;
    int mo_points = 0;
    std::string mo_field = "singular", mo_modes, mo_out = "-";
    cmd_mono->add_option("--N", mo_N)->required();
    cmd_mono->add_option("--p", mo_p)->required();
    cmd_mono->add_option("--alpha", mo_alpha)->required();
    cmd_mono->add_option("--beta", mo_beta)->required();
    cmd_mono->add_option("--field", mo_field)->check(CLI::IsMember({"singular", "bump", "shoot"}));
    cmd_mono->add_option("--a", mo_a);
    cmd_mono->add_option("--b", mo_b);
    cmd_mono->add_option("--modes", mo_modes, "bump modes k:amplitude:center:width[,...]");
    cmd_mono->add_option("--r-min", mo_rmin)->required();
    cmd_mono->add_option("--r-max", mo_rmax)->required();
    cmd_mono->add_option("--points", mo_points)->required();
    cmd_mono->add_option("--out", mo_out);

    // ---- shoot
    auto* cmd_shoot = app.add_subcommand("shoot", "radial shooting run, field dump to CSV");
    double sh_N = 0, sh_p = 0, sh_alpha = 0, sh_beta = 0, sh_a = 1.0, sh_b = 0.1;
    double sh_rmax = 0, sh_rmin = 0.01;
    int sh_points = 512;
    std::string sh_out = "-";
    cmd_shoot->add_option("--N", sh_N)->required();
    cmd_shoot->add_option("--p", sh_p)->required();
    cmd_shoot->add_option("--alpha", sh_alpha)->required();
    cmd_shoot->add_option("--beta", sh_beta)->required();
    cmd_shoot->add_option("--a", sh_a)->required();
    cmd_shoot->add_option("--b", sh_b)->required();
    cmd_shoot->add_option("--r-max", sh_rmax)->required();
    cmd_shoot->add_option("--r-min", sh_rmin);
    cmd_shoot->add_option("--points", sh_points);
    cmd_shoot->add_option("--out", sh_out);

    // ---- verify
    auto* cmd_verify = app.add_subcommand("verify", "run the invariant and acceptance suite");
    bool quick = false;
    cmd_verify->add_flag("--quick", quick);

    // ---- sweep
    auto* cmd_sweep = app.add_subcommand("sweep", "critical-dimension table for a parameter file");
    std::string sw_in, sw_out, sw_nvals;
    int sw_jobs = default_jobs();
    cmd_sweep->add_option("--input", sw_in)->required();
    cmd_sweep->add_option("--output", sw_out)->required();
    cmd_sweep->add_option("--n-values", sw_nvals, "comma-separated N values");
    cmd_sweep->add_option("--jobs", sw_jobs);

    try {
        std::vector<std::string> args(argv.rbegin(), argv.rend());
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (cmd_critdim->parsed()) {
            csvio::SweepRow row{cd_p, cd_alpha, cd_beta};
            const double n_ref = std::max(5.0, 5.0 + 2.0 * cd_beta);
            SystemParams::make(n_ref, cd_p, cd_alpha, cd_beta);  // validate; throws on bad input
            std::cout << "p,alpha,beta,bracket_lo,bracket_hi,n_crit,cowan,fazly\n"
                      << csvio::num(row.p) << "," << csvio::num(row.alpha) << ","
                      << csvio::num(row.beta) << "," << critdim_fields(row, cd_tol) << "\n";
            return 0;
        }
        if (cmd_classify->parsed()) {
            const SystemParams P = SystemParams::make(cl_N, cl_p, cl_alpha, cl_beta);
            const critdim::CritDimResult r = critdim::critical_dimension(P);
            const DerivedParams d = derive(P);
            std::cout << "regime," << regime_name(classify_regime(P, r.root)) << "\n"
                      << "crit_dim," << csvio::num(r.root) << "\n"
                      << "decay_u," << csvio::num(d.decay_u) << "\n"
                      << "decay_v," << csvio::num(d.decay_v) << "\n"
                      << "energy_exp," << csvio::num(d.energy_exp) << "\n"
                      << "singular_coef," << csvio::num(d.singular_coef) << "\n"
                      << "mode_coupling," << csvio::num(d.mode_coupling) << "\n"
                      << "drift_const," << csvio::num(d.drift_const) << "\n"
                      << "hyperbola_dim," << csvio::num(d.hyperbola_dim) << "\n"
                      << "bracket_hi," << csvio::num(d.bracket_hi) << "\n";
            return 0;
        }
        if (cmd_mono->parsed()) {
            const SystemParams P = SystemParams::make(mo_N, mo_p, mo_alpha, mo_beta);
            const fields::RadialGrid grid = make_grid(mo_rmin, mo_rmax, mo_points);
            fields::Field field;
            std::vector<std::string> notes;
            if (mo_field == "singular") {
                field = fields::singular_field(P, grid);
            } else if (mo_field == "bump") {
                if (mo_modes.empty()) throw ParameterError("--field bump requires --modes");
                field = fields::bump_field(parse_modes(mo_modes), P, grid);
            } else {
                const fields::ShootingResult s = fields::shoot(P, mo_a, mo_b, grid);
                field = s.field;
                notes.push_back(
                    std::string("termination=") +
                    (s.terminated == fields::Termination::BlowupDetected ? "BlowupDetected"
                                                                         : "ReachedRmax") +
                    " termination_radius=" + csvio::num(s.termination_radius));
            }
            std::vector<double> radii;
            for (std::size_t i = 4; i + 4 < field.grid.size(); ++i)
                radii.push_back(field.grid.r[i]);
            const functionals::MonotonicityReport rep =
                functionals::monotonicity_curve(field, radii);
            std::ostringstream out;
            for (const std::string& n : notes) out << "# " << n << "\n";
            functionals::dump_monotonicity(rep, out);
            write_text(mo_out, out.str());
            return 0;
        }
        if (cmd_shoot->parsed()) {
            const SystemParams P = SystemParams::make(sh_N, sh_p, sh_alpha, sh_beta);
            const fields::RadialGrid grid = make_grid(sh_rmin, sh_rmax, sh_points);
            const fields::ShootingResult s = fields::shoot(P, sh_a, sh_b, grid);
            std::ostringstream out;
            fields::dump_field(
                s.field, out,
                {std::string("termination=") +
                     (s.terminated == fields::Termination::BlowupDetected ? "BlowupDetected"
                                                                          : "ReachedRmax") +
                 " termination_radius=" + csvio::num(s.termination_radius)});
            write_text(sh_out, out.str());
            return 0;
        }
        if (cmd_verify->parsed()) {
            const std::vector<verify::CheckResult> results = verify::run_suite(quick);
            int failed = 0;
            for (const verify::CheckResult& c : results) {
                std::cout << (c.pass ? "PASS " : "FAIL ") << c.name << " -- " << c.detail
                          << "\n";
                if (!c.pass) ++failed;
            }
            std::cout << (failed == 0 ? "all " : "FAILED ")
                      << (failed == 0 ? std::to_string(results.size()) + " checks passed"
                                      : std::to_string(failed) + " of " +
                                            std::to_string(results.size()) + " checks")
                      << "\n";
            return failed == 0 ? 0 : 1;
        }
        if (cmd_sweep->parsed()) {
            std::ifstream in(sw_in, std::ios::binary);
            if (!in) throw Error("cannot open input file: " + sw_in);
            std::stringstream buf;
            buf << in.rdbuf();
            const std::vector<csvio::SweepRow> rows = csvio::parse_sweep(buf.str());
            std::vector<double> n_values;
            if (!sw_nvals.empty()) {
                std::istringstream ss(sw_nvals);
                std::string cell;
                while (std::getline(ss, cell, ',')) n_values.push_back(std::stod(cell));
            }
            write_text(sw_out, sweep_to_string(rows, n_values, sw_jobs));
            return 0;
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const ValidationError& e) {
        std::cerr << "invalid parameters: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

}  // namespace lanelab::cli
