// zetaline -- critical-line second/fourth moment toolkit.
//
// Subcommands: areas, sweep, ladder, moments, tka, c0.
// Exit codes: 0 success, 1 usage, 2 tolerance/identity failure,
// 3 checkpoint mismatch.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "zetaline/zetaline.hpp"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using namespace zetaline;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitTolerance = 2;
constexpr int kExitCheckpoint = 3;

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

struct CommonOptions {
    EvalConfig cfg;
    QuadOptions quad;
    std::string c0_spec = "0";
    double identity_tol = 1e-4;

    void attach(CLI::App* app) {
        app->add_option("--rs-order", cfg.rs_correction_order,
                        "Riemann-Siegel correction terms (0-4)")
            ->envname("ZL_RS_ORDER");
        app->add_option("--em-threshold", cfg.em_threshold,
                        "switch to Euler-Maclaurin below this t");
        app->add_option("--em-terms", cfg.em_terms, "Euler-Maclaurin main-sum floor");
        app->add_option("--target-abs-error", cfg.target_abs_error,
                        "absolute error goal per Z evaluation");
        app->add_option("--rel-tol", quad.rel_tol, "relative tolerance, prefix integrals")
            ->envname("ZL_REL_TOL");
        app->add_option("--rel-tol-weighted", quad.rel_tol_weighted,
                        "relative tolerance, weighted integrals");
        app->add_option("--c0", c0_spec, "ladder constant c0 (number or 'auto')")
            ->envname("ZL_C0");
        app->add_option("--identity-tol", identity_tol,
                        "relative tolerance for identity-residual checks");
    }

    double resolve_c0() const {
        if (c0_spec == "auto") {
            Workspace ws(cfg, quad, 0.0);
            const auto reports = ws.tka_check({0.05, 0.04, 0.02, 0.01});
            return reports.front().c0_estimate;
        }
        return std::stod(c0_spec);
    }
};

json report_to_json(const AreaReport& rep, double c0) {
    json j;
    j["T"] = rep.T;
    j["mode"] = to_string(rep.mode);
    j["sigma_level"] = rep.sigma_level;
    j["m_plus"] = rep.m_plus;
    j["m_minus"] = rep.m_minus;
    j["diff"] = rep.diff;
    j["abs_sum"] = rep.abs_sum;
    if (rep.eta1) j["eta1"] = *rep.eta1; else j["eta1"] = nullptr;
    if (rep.eta2) j["eta2"] = *rep.eta2; else j["eta2"] = nullptr;
    j["i2"] = rep.i2;
    j["i4"] = rep.i4;
    j["crossing_count"] = rep.crossing_count;
    j["near_tangency_count"] = rep.near_tangency_count;
    j["c0"] = c0;
    json res;
    res["area"] = rep.residual_area_identity;
    if (rep.residual_eta_identity) res["eta"] = *rep.residual_eta_identity;
    else res["eta"] = nullptr;
    if (rep.recon_rel_err_plus) res["reconstruct_m_plus"] = *rep.recon_rel_err_plus;
    else res["reconstruct_m_plus"] = nullptr;
    if (rep.recon_rel_err_minus) res["reconstruct_m_minus"] = *rep.recon_rel_err_minus;
    else res["reconstruct_m_minus"] = nullptr;
    j["identity_residuals"] = res;
    json est;
    est["areas"] = rep.est_error_areas;
    est["i2"] = rep.est_error_i2;
    est["i4"] = rep.est_error_i4;
    j["est_error"] = est;
    json diag;
    for (const auto& [k, v] : conditional_diagnostics(rep.T, rep)) diag[k] = v;
    j["conditional_diagnostics"] = diag;
    return j;
}

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream os(out_path, std::ios::trunc);
    if (!os) throw std::runtime_error("cannot write " + out_path);
    os << text;
}

bool parse_mode(const std::string& spec, LevelMode& mode, double& level) {
    if (spec == "moser") {
        mode = LevelMode::moser;
        return true;
    }
    if (spec == "balasubramanian") {
        mode = LevelMode::balasubramanian;
        return true;
    }
    if (spec.rfind("level=", 0) == 0) {
        mode = LevelMode::explicit_level;
        level = std::stod(spec.substr(6));
        return true;
    }
    return false;
}

int cmd_areas(const CommonOptions& common, double T, const std::string& mode_spec,
              const std::string& out_path) {
    LevelMode mode;
    double level = 0.0;
    if (!parse_mode(mode_spec, mode, level)) {
        std::cerr << "areas: bad --mode '" << mode_spec
                  << "' (expected moser | balasubramanian | level=<value>)\n";
        return kExitUsage;
    }
    const double c0 = common.resolve_c0();
    Workspace ws(common.cfg, common.quad, c0);
    const AreaReport rep = ws.area_balance_report(T, mode, level);
    write_output(report_to_json(rep, c0).dump(2) + "\n", out_path);

    const bool area_ok = rep.residual_area_identity <= common.identity_tol * std::max(1.0, rep.i2);
    const bool eta_ok = !rep.residual_eta_identity ||
                        *rep.residual_eta_identity <= common.identity_tol * std::max(1.0, rep.i4);
    if (!area_ok || !eta_ok) {
        std::cerr << "areas: identity residual exceeds tolerance (area="
                  << rep.residual_area_identity << ", eta="
                  << (rep.residual_eta_identity ? *rep.residual_eta_identity : 0.0) << ")\n";
        return kExitTolerance;
    }
    return kExitOk;
}

std::vector<double> make_grid(double t_min, double t_max, int points, bool log_grid) {
    std::vector<double> grid;
    grid.reserve(points);
    for (int i = 0; i < points; ++i) {
        const double u = points == 1 ? 0.0 : static_cast<double>(i) / (points - 1);
        grid.push_back(log_grid ? std::exp(std::log(t_min) + u * (std::log(t_max) - std::log(t_min)))
                                : t_min + u * (t_max - t_min));
    }
    grid.back() = t_max;
    return grid;
}

std::string row_to_csv(const SweepRow& r) {
    std::ostringstream os;
    os << fmt17(r.T) << ',' << fmt17(r.i2) << ',' << fmt17(r.i4) << ',' << fmt17(r.phi) << ','
       << fmt17(r.sigma) << ',' << fmt17(r.sigma1) << ',' << fmt17(r.m_plus) << ','
       << fmt17(r.m_minus) << ',' << fmt17(r.diff_moser) << ',' << fmt17(r.diff_bala) << ','
       << fmt17(r.eta1) << ',' << fmt17(r.eta2) << ',' << fmt17(r.eta_gap_over_ln3T) << ','
       << fmt17(r.fourth_moment_ratio);
    return os.str();
}

long count_data_lines(const std::string& path) {
    std::ifstream is(path);
    if (!is) return -1;
    long n = -1;  // header does not count
    std::string line;
    while (std::getline(is, line))
        if (!line.empty()) ++n;
    return n;
}

int cmd_sweep(const CommonOptions& common, double t_min, double t_max, int points, bool log_grid,
              const std::string& ckpt_path, const std::string& out_path,
              const std::string& plot_dir, long stop_after) {
    if (!(t_min >= 10.0) || !(t_min < t_max) || points < 2) {
        std::cerr << "sweep: require 10 <= t-min < t-max and points >= 2\n";
        return kExitUsage;
    }
    const double c0 = common.resolve_c0();
    Workspace ws(common.cfg, common.quad, c0);
    const auto grid = make_grid(t_min, t_max, points, log_grid);

    std::size_t done = 0;
    if (!ckpt_path.empty()) {
        CheckpointFile ckpt(ckpt_path);
        done = ckpt.count_matching(ws.cfg_hash());
        if (done == 0 && !ckpt.load().empty()) {
            std::cerr << "sweep: checkpoint " << ckpt_path
                      << " has rows, but none match the current configuration; "
                         "use a fresh checkpoint path to start over\n";
            return kExitCheckpoint;
        }
        if (done > 0) {
            if (done > grid.size()) {
                std::cerr << "sweep: checkpoint has more rows than the grid (config mismatch?)\n";
                return kExitCheckpoint;
            }
            const auto last = ckpt.last_matching(ws.cfg_hash());
            try {
                ws.restore(*last);
            } catch (const checkpoint_error& e) {
                std::cerr << "sweep: " << e.what() << "\n";
                return kExitCheckpoint;
            }
            if (std::abs(last->frontier - grid[done - 1]) > 1e-9 * grid[done - 1]) {
                std::cerr << "sweep: checkpoint frontier " << last->frontier
                          << " does not match grid point " << grid[done - 1] << "\n";
                return kExitCheckpoint;
            }
        }
    }

    // Output file: fresh runs write the header; resumed runs append and the
    // existing row count must match the checkpoint.
    std::ofstream out;
    const bool to_file = !out_path.empty();
    if (to_file) {
        if (done > 0) {
            const long have = count_data_lines(out_path);
            if (have != static_cast<long>(done)) {
                std::cerr << "sweep: output file has " << have << " rows, checkpoint says " << done
                          << "\n";
                return kExitCheckpoint;
            }
            out.open(out_path, std::ios::app);
        } else {
            out.open(out_path, std::ios::trunc);
            out << sweep_csv_header() << "\n";
        }
        if (!out) {
            std::cerr << "sweep: cannot write " << out_path << "\n";
            return kExitUsage;
        }
    } else if (done == 0) {
        std::cout << sweep_csv_header() << "\n";
    }

    long written = 0;
    for (std::size_t i = done; i < grid.size(); ++i) {
        if (stop_after >= 0 && written >= stop_after) return kExitOk;
        const SweepRow row = ws.sweep_row(grid[i]);
        const std::string line = row_to_csv(row);
        if (to_file) {
            out << line << "\n";
            out.flush();
        } else {
            std::cout << line << "\n";
        }
        if (!ckpt_path.empty()) CheckpointFile(ckpt_path).append(ws.checkpoint());
        ++written;
    }

    if (ws.worst_excess() > 0.0) {
        const auto [lo, hi] = ws.worst_panel();
        std::cerr << "sweep: warning: panel [" << lo << ", " << hi
                  << "] missed its error budget by " << ws.worst_excess()
                  << " after max subdivisions (folded into est_error)\n";
    }

    if (!plot_dir.empty() && to_file) {
        fs::create_directories(plot_dir);
        std::ifstream is(out_path);
        std::string header;
        std::getline(is, header);
        std::vector<std::string> cols;
        {
            std::stringstream ss(header);
            std::string c;
            while (std::getline(ss, c, ',')) cols.push_back(c);
        }
        std::vector<std::ofstream> files;
        for (std::size_t c = 1; c < cols.size(); ++c)
            files.emplace_back(fs::path(plot_dir) / (cols[c] + ".dat"));
        std::string line;
        while (std::getline(is, line)) {
            std::stringstream ss(line);
            std::string field;
            std::vector<std::string> fields;
            while (std::getline(ss, field, ',')) fields.push_back(field);
            for (std::size_t c = 1; c < fields.size(); ++c)
                files[c - 1] << fields[0] << ' ' << fields[c] << "\n";
        }
    }
    return kExitOk;
}

int cmd_ladder(const CommonOptions& common, double T, bool solve_x, double mu_coeff,
               const std::string& out_path) {
    const double c0 = common.resolve_c0();
    Workspace ws(common.cfg, common.quad, c0);
    const LadderPoint pt = ws.ladder_at(T);
    json j;
    j["T"] = pt.T;
    j["i2"] = pt.i2;
    j["phi"] = pt.phi;
    j["phi_over_2T"] = pt.phi / (2.0 * T);
    j["sigma"] = pt.sigma;
    j["sigma1"] = pt.sigma1;
    j["solve_residual"] = pt.solve_residual;
    j["c0_used"] = pt.c0_used;
    if (solve_x) {
        const LadderParameterSolution sol = ws.solve_ladder_parameter(T, mu_coeff);
        j["x"] = sol.x;
        j["mu_x"] = sol.mu_x;
        j["x_over_phi"] = sol.x / sol.phi;
        j["mu_over_phi"] = sol.mu_x / sol.phi;
        j["x_residual_est"] = sol.residual_est;
    }
    write_output(j.dump(2) + "\n", out_path);
    return kExitOk;
}

int cmd_moments(const CommonOptions& common, double T, const std::string& out_path) {
    Workspace ws(common.cfg, common.quad, 0.0);
    const QuadResult r2 = ws.z2_prefix(T);
    const QuadResult r4 = ws.z4_prefix(T);
    json j;
    j["T"] = T;
    j["i2"] = r2.value;
    j["i4"] = r4.value;
    j["est_error_i2"] = r2.est_error;
    j["est_error_i4"] = r4.est_error;
    if (T >= 100.0)
        j["fourth_moment_ratio"] = fourth_moment_ratio(r4.value, T);
    else
        j["fourth_moment_ratio"] = nullptr;
    j["panels"] = r2.panels;
    j["evals"] = r2.evals;
    write_output(j.dump(2) + "\n", out_path);
    return kExitOk;
}

std::vector<double> parse_delta_list(const std::string& spec) {
    std::vector<double> out;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stod(item));
    return out;
}

int cmd_tka(const CommonOptions& common, const std::string& delta_spec,
            const std::string& out_path) {
    const auto deltas = parse_delta_list(delta_spec);
    Workspace ws(common.cfg, common.quad, 0.0);
    const auto reports = ws.tka_check(deltas);
    std::ostringstream os;
    os << "delta,lhs,rhs_main,diff,c0_estimate\n";
    for (const auto& r : reports)
        os << fmt17(r.delta) << ',' << fmt17(r.lhs) << ',' << fmt17(r.rhs_main) << ','
           << fmt17(r.diff) << ',' << fmt17(r.c0_estimate) << "\n";
    write_output(os.str(), out_path);
    return kExitOk;
}

int cmd_c0(const CommonOptions& common, const std::string& delta_spec,
           const std::string& out_path) {
    const auto deltas = parse_delta_list(delta_spec);
    Workspace ws(common.cfg, common.quad, 0.0);
    const auto reports = ws.tka_check(deltas);
    json j;
    j["delta_list"] = deltas;
    j["c0_estimate"] = reports.empty() ? 0.0 : reports.front().c0_estimate;
    json diffs;
    for (const auto& r : reports) diffs[fmt17(r.delta)] = r.diff;
    j["diff_by_delta"] = diffs;
    write_output(j.dump(2) + "\n", out_path);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hardy Z(t) moments, Jacob's ladder, and area-balance reports"};
    app.require_subcommand(1);

    CommonOptions common;

    double t = 0.0;
    std::string mode_spec = "moser";
    std::string out_path;
    std::string ckpt_path;
    std::string plot_dir;
    std::string delta_spec = "0.05,0.04,0.02,0.01";
    double t_min = 100.0, t_max = 10000.0;
    int points = 10;
    bool log_grid = false;
    bool solve_x = false;
    double mu_coeff = 7.0;
    long stop_after = -1;

    auto* areas = app.add_subcommand("areas", "area-balance report at one T");
    common.attach(areas);
    areas->add_option("--t", t, "upper limit T")->required();
    areas->add_option("--mode", mode_spec, "moser | balasubramanian | level=<value>");
    areas->add_option("--out", out_path, "write JSON report here instead of stdout");

    auto* sweep = app.add_subcommand("sweep", "sweep a T grid, emit CSV rows");
    common.attach(sweep);
    sweep->add_option("--t-min", t_min, "grid start (>= 10)")->required();
    sweep->add_option("--t-max", t_max, "grid end")->required();
    sweep->add_option("--points", points, "number of grid points (>= 2)")->required();
    sweep->add_flag("--log-grid", log_grid, "geometric grid spacing");
    sweep->add_option("--checkpoint", ckpt_path, "checkpoint CSV (append-only, resumable)");
    sweep->add_option("--out", out_path, "output CSV path (required for resume)");
    sweep->add_option("--plot-dir", plot_dir, "emit two-column (T value) files per metric");
    sweep->add_option("--stop-after", stop_after, "stop after writing N rows (testing)");

    auto* ladder = app.add_subcommand("ladder", "solve the ladder at one T");
    common.attach(ladder);
    ladder->add_option("--t", t, "upper limit T")->required();
    ladder->add_flag("--solve-x", solve_x, "also solve the integral equation for x");
    ladder->add_option("--mu-coeff", mu_coeff, "mu(x) = <coeff> * x ln x");
    ladder->add_option("--out", out_path, "write JSON here instead of stdout");

    auto* moments = app.add_subcommand("moments", "prefix integrals I2, I4 at one T");
    common.attach(moments);
    moments->add_option("--t", t, "upper limit T")->required();
    moments->add_option("--out", out_path, "write JSON here instead of stdout");

    auto* tka = app.add_subcommand("tka", "weighted second moment vs the closed form");
    common.attach(tka);
    tka->add_option("--delta-list", delta_spec, "comma-separated deltas in (0, 0.5]");
    tka->add_option("--out", out_path, "write CSV here instead of stdout");

    auto* c0 = app.add_subcommand("c0", "estimate c0 by extrapolating the tka diff");
    common.attach(c0);
    c0->add_flag("--fit", "fit from --delta-list (default behaviour)");
    c0->add_option("--delta-list", delta_spec, "comma-separated deltas in (0, 0.5]");
    c0->add_option("--out", out_path, "write JSON here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        common.cfg.validate();
        common.quad.validate();
        if (areas->parsed()) return cmd_areas(common, t, mode_spec, out_path);
        if (sweep->parsed())
            return cmd_sweep(common, t_min, t_max, points, log_grid, ckpt_path, out_path,
                             plot_dir, stop_after);
        if (ladder->parsed()) return cmd_ladder(common, t, solve_x, mu_coeff, out_path);
        if (moments->parsed()) return cmd_moments(common, t, out_path);
        if (tka->parsed()) return cmd_tka(common, delta_spec, out_path);
        if (c0->parsed()) return cmd_c0(common, delta_spec, out_path);
    } catch (const checkpoint_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckpoint;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        // precondition violations (bad T, bad delta, ...) are usage errors
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitTolerance;
    }
    return kExitUsage;
}
