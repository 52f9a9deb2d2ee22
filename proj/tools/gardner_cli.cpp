// Command-line runner for the extended B-spline collocation solver:
//   run        integrate an experiment and export profiles + diagnostics
//   scan       optimize the basis extension parameter against the exact error
//   stability  sweep the von Neumann amplification factors
//   table      reproduce the published reference tables

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "gardner/assembly.hpp"
#include "gardner/diagnostics.hpp"
#include "gardner/init.hpp"
#include "gardner/io.hpp"
#include "gardner/lambda_opt.hpp"
#include "gardner/problems.hpp"
#include "gardner/simulate.hpp"
#include "gardner/stability.hpp"
#include "reference_tables.hpp"

using namespace gardner;
namespace fs = std::filesystem;

namespace {

struct CommonOptions {
    std::string preset_name;
    std::optional<int> n;
    std::optional<double> dt, t_end, lambda, epsilon;
    std::string out_dir = "out";
    std::string format_name = "csv";
};

ExperimentPreset resolve_preset(const CommonOptions& opt) {
    if (opt.preset_name.empty())
        throw std::invalid_argument("a --preset (pulse, kink, generation) is required");
    ExperimentPreset p = preset(opt.preset_name);
    if (opt.n) p.grid.n_intervals = *opt.n;
    if (opt.dt) p.dt = *opt.dt;
    if (opt.t_end) p.t_end = *opt.t_end;
    if (opt.lambda) p.params.lambda = *opt.lambda;
    if (opt.epsilon) p.params.epsilon = *opt.epsilon;
    p.grid.validate();
    return p;
}

fs::path ensure_out_dir(const std::string& dir) {
    fs::path path(dir);
    std::error_code ec;
    fs::create_directories(path, ec);
    if (ec || !fs::is_directory(path))
        throw std::invalid_argument("cannot create output directory '" + dir + "'");
    return path;
}

std::string trim_number(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", v);
    return buf;
}

std::vector<std::pair<std::string, std::string>> config_echo(const ExperimentPreset& p) {
    return {
        {"preset", p.name},
        {"mu1", format_double(p.params.mu1)},
        {"mu2", format_double(p.params.mu2)},
        {"mu3", format_double(p.params.mu3)},
        {"epsilon", format_double(p.params.epsilon)},
        {"lambda", format_double(p.params.lambda)},
        {"a", format_double(p.grid.a)},
        {"b", format_double(p.grid.b)},
        {"n", std::to_string(p.grid.n_intervals)},
        {"dt", format_double(p.dt)},
        {"t_end", format_double(p.t_end)},
    };
}

int cmd_run(const CommonOptions& opt, const std::string& snapshot_list) {
    const ExperimentPreset p = resolve_preset(opt);
    const OutputFormat format = parse_format(opt.format_name);
    const fs::path out = ensure_out_dir(opt.out_dir);
    const SimulationSetup setup = setup_from(p);
    const long total_steps = required_steps(setup.t_end, setup.dt);

    std::vector<double> snapshots;
    if (snapshot_list.empty()) {
        for (double t : p.default_snapshots)
            if (t <= p.t_end + 1e-9) snapshots.push_back(std::min(t, p.t_end));
    } else {
        std::stringstream ss(snapshot_list);
        std::string item;
        while (std::getline(ss, item, ',')) snapshots.push_back(std::stod(item));
    }
    std::map<long, double> snapshot_steps;
    for (double t : snapshots) {
        if (t < 0.0 || t > p.t_end + 1e-9)
            throw std::invalid_argument("snapshot time " + trim_number(t) + " outside [0, t_end]");
        const long k = std::lround(t / setup.dt);
        if (std::abs(k * setup.dt - t) > 1e-9)
            throw std::invalid_argument("snapshot time " + trim_number(t) +
                                        " is not a multiple of dt");
        snapshot_steps[k] = t;
    }

    std::vector<DiagnosticsRecord> records;
    ConservedQuantities q0{};
    long step_index = 0;
    const auto t_start = std::chrono::steady_clock::now();
    const CoefficientState final_state = run_simulation(setup, [&](const CoefficientState& st) {
        const auto q = conserved_quantities(st, setup.params, setup.grid);
        if (step_index == 0) q0 = q;
        DiagnosticsRecord rec;
        rec.time = st.time;
        if (setup.exact) rec.linf = linf_error(st, setup.exact, setup.grid, setup.params.lambda);
        rec.m = q.m;
        rec.e = q.e;
        rec.h_quantity = q.h;
        const RelativeChanges c = relative_changes(q, q0);
        rec.c_m = c.c_m;
        rec.c_e = c.c_e;
        rec.c_h = c.c_h;
        records.push_back(rec);
        const auto snap = snapshot_steps.find(step_index);
        if (snap != snapshot_steps.end()) {
            const fs::path file =
                out / ("profile_t" + trim_number(snap->second) + format_extension(format));
            write_profile(file, st, setup.grid, setup.params.lambda, setup.exact, format);
        }
        ++step_index;
    });
    const double wall =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();

    write_diagnostics(out / (std::string("diagnostics") + format_extension(format)), records,
                      format);

    auto summary = config_echo(p);
    summary.emplace_back("steps", std::to_string(total_steps));
    const DiagnosticsRecord& last = records.back();
    if (last.linf) summary.emplace_back("final_linf", format_double(*last.linf));
    summary.emplace_back("final_C_M", format_double(last.c_m));
    summary.emplace_back("final_C_E", format_double(last.c_e));
    summary.emplace_back("final_C_H", format_double(last.c_h));
    summary.emplace_back("wall_seconds", format_double(wall));
    write_summary(out / (std::string("summary") + format_extension(format)), summary, format);

    std::printf("run complete: t = %s, %ld steps\n", trim_number(final_state.time).c_str(),
                total_steps);
    if (last.linf) std::printf("  linf(%s) = %.6e\n", trim_number(last.time).c_str(), *last.linf);
    std::printf("  C(M) = %.4e  C(E) = %.4e  C(H) = %.4e\n", last.c_m, last.c_e, last.c_h);
    std::printf("  outputs in %s\n", out.string().c_str());
    return 0;
}

int cmd_scan(const CommonOptions& opt, const ScanSpec& spec_in) {
    const ExperimentPreset p = resolve_preset(opt);
    const OutputFormat format = parse_format(opt.format_name);
    const fs::path out = ensure_out_dir(opt.out_dir);
    ScanSpec spec = spec_in;
    if (spec.objective_time <= 0.0) spec.objective_time = p.t_end;

    const ScanResult result = scan(p, spec);
    write_scan_trace(out / (std::string("scan_trace") + format_extension(format)), result.trace,
                     format);

    auto summary = config_echo(p);
    summary.emplace_back("scan_lo", format_double(spec.lo));
    summary.emplace_back("scan_hi", format_double(spec.hi));
    summary.emplace_back("coarse_step", format_double(spec.coarse_step));
    summary.emplace_back("objective_time", format_double(spec.objective_time));
    summary.emplace_back("lambda_star", format_double(result.lambda_star));
    summary.emplace_back("linf_star", format_double(result.linf_star));
    write_summary(out / (std::string("scan_summary") + format_extension(format)), summary, format);

    std::printf("lambda_star = %.6g   linf(%s) = %.6e   (%zu candidates)\n", result.lambda_star,
                trim_number(spec.objective_time).c_str(), result.linf_star, result.trace.size());
    std::printf("  trace in %s\n", out.string().c_str());
    return 0;
}

int cmd_stability(const CommonOptions& opt, double mu3_flag, double h_flag, double eps_lo,
                  double eps_hi, int modes, int eps_count, double lin_weight) {
    PhysicsParams params;
    params.mu3 = mu3_flag;
    double h = h_flag, dt = 0.1;
    if (!opt.preset_name.empty()) {
        const ExperimentPreset p = resolve_preset(opt);
        params = p.params;
        h = p.grid.h();
        dt = p.dt;
    }
    if (opt.dt) dt = *opt.dt;
    if (opt.lambda) params.lambda = *opt.lambda;
    if (!(h > 0.0)) throw std::invalid_argument("stability: provide --dx > 0 or a --preset");

    const OutputFormat format = parse_format(opt.format_name);
    const fs::path out = ensure_out_dir(opt.out_dir);
    const StabilityReport report =
        verify_stability(params, h, dt, eps_lo, eps_hi, modes, eps_count, lin_weight);
    write_stability_samples(out / (std::string("stability") + format_extension(format)),
                            report.samples, format);
    std::printf("max|rho1| = %.15f at phi = %.6f, eps = %.4f\n", report.max_abs_rho1,
                report.argmax_phi1, report.argmax_eps1);
    std::printf("max|rho2| = %.15f at phi = %.6f, eps = %.4f\n", report.max_abs_rho2,
                report.argmax_phi2, report.argmax_eps2);
    std::printf("verdict vs 1+1e-12: %s\n", report.passes ? "pass" : "fail");
    return 0;
}

double linf_probe(const SimulationSetup& setup, double probe_time) {
    SimulationSetup s = setup;
    s.t_end = probe_time;
    return linf_at_end(s);
}

void print_pair(double computed, double reference) {
    const double dev = reference != 0.0 ? std::abs(computed - reference) / std::abs(reference) : 0.0;
    std::printf("%12.5e %12.5e %8.1e |", computed, reference, dev);
}

int cmd_table(int id) {
    switch (id) {
        case 1: {
            std::printf("pulse error norms (computed / reference / rel.dev)\n");
            std::printf("%4s | %38s | %38s | %10s\n", "N", "Linf(2.5) lambda=0",
                        "Linf(5) lambda=0", "lambda*");
            for (const auto& row : reference::kPulseErrors) {
                ExperimentPreset p = preset("pulse");
                p.grid.n_intervals = row.n;
                const SimulationSetup s = setup_from(p);
                const double e25 = linf_probe(s, 2.5);
                const double e5 = linf_probe(s, 5.0);
                const ScanResult r = scan(p, ScanSpec{});
                std::printf("%4d | ", row.n);
                print_pair(e25, row.linf25_classic);
                std::printf(" ");
                print_pair(e5, row.linf5_classic);
                std::printf(" %8.5f (ref %8.5f)\n", r.lambda_star, row.lambda_opt);
                SimulationSetup opt_setup = s;
                opt_setup.params.lambda = r.lambda_star;
                std::printf("%4s | ", "");
                print_pair(linf_probe(opt_setup, 2.5), row.linf25_opt);
                std::printf(" ");
                print_pair(linf_probe(opt_setup, 5.0), row.linf5_opt);
                std::printf("   at lambda*\n");
            }
            return 0;
        }
        case 2:
        case 4: {
            const bool pulse_table = id == 2;
            std::printf("%s conservation: computed (reference)\n", pulse_table ? "pulse" : "kink");
            std::printf("%4s | %18s %18s %18s | %22s %22s %22s\n", "N", "M0", "E0", "H0", "C(M)",
                        "C(E)", "C(H)");
            const auto rows = pulse_table ? std::vector<reference::ConservationRow>(
                                                std::begin(reference::kPulseConservation),
                                                std::end(reference::kPulseConservation))
                                          : std::vector<reference::ConservationRow>(
                                                std::begin(reference::kKinkConservation),
                                                std::end(reference::kKinkConservation));
            for (const auto& row : rows) {
                ExperimentPreset p = preset(pulse_table ? "pulse" : "kink");
                p.grid.n_intervals = row.n;
                const SimulationSetup s = setup_from(p);
                const auto initial = fit_initial(s.initial, s.grid, s.params.lambda);
                const auto q0 = conserved_quantities(initial, s.params, s.grid);
                const auto final_state = run_simulation(s);
                const auto c = relative_changes(conserved_quantities(final_state, s.params, s.grid), q0);
                std::printf("%4d | %9.5f (%6.4f) %9.5f (%6.4f) %9.5f (%6.4f) | ", row.n, q0.m,
                            row.m0, q0.e, row.e0, q0.h, row.h0);
                std::printf("%9.3e (%9.3e)  %9.3e (%9.3e)  %9.3e (%9.3e)\n", c.c_m, row.c_m, c.c_e,
                            row.c_e, c.c_h, row.c_h);
            }
            return 0;
        }
        case 3: {
            std::printf("kink error norms (computed / reference / rel.dev)\n");
            std::printf("%4s | %38s | %38s | %10s\n", "N", "Linf(4) lambda=0", "Linf(12) lambda=0",
                        "lambda*");
            for (const auto& row : reference::kKinkErrors) {
                ExperimentPreset p = preset("kink");
                p.grid.n_intervals = row.n;
                const SimulationSetup s = setup_from(p);
                const double e4 = linf_probe(s, 4.0);
                const double e12 = linf_probe(s, 12.0);
                const ScanResult r = scan(p, ScanSpec{});
                std::printf("%4d | ", row.n);
                print_pair(e4, row.linf4_classic);
                std::printf(" ");
                print_pair(e12, row.linf12_classic);
                std::printf(" %8.5f (ref %8.5f)\n", r.lambda_star, row.lambda_opt);
                SimulationSetup opt_setup = s;
                opt_setup.params.lambda = r.lambda_star;
                std::printf("%4s | ", "");
                print_pair(linf_probe(opt_setup, 4.0), row.linf4_opt);
                std::printf(" ");
                print_pair(linf_probe(opt_setup, 12.0), row.linf12_opt);
                std::printf("   at lambda*\n");
            }
            return 0;
        }
        case 5: {
            std::printf("wave generation conservation: computed (reference)\n");
            const ExperimentPreset p = preset("generation");
            const SimulationSetup s = setup_from(p);
            const auto initial = fit_initial(s.initial, s.grid, s.params.lambda);
            const auto q0 = conserved_quantities(initial, s.params, s.grid);
            std::printf("M0 = %.5f (5.2255)  E0 = %.5f (1.5033)  H0 = %.5f (1.5994)\n", q0.m, q0.e,
                        q0.h);
            std::printf("%4s | %22s %22s %22s\n", "t", "C(M)", "C(E)", "C(H)");
            std::map<long, const reference::GenerationRow*> probes;
            for (const auto& row : reference::kGenerationConservation)
                probes[std::lround(row.t / s.dt)] = &row;
            long step_index = 0;
            run_simulation(s, [&](const CoefficientState& st) {
                const auto probe = probes.find(step_index);
                if (probe != probes.end()) {
                    const auto c =
                        relative_changes(conserved_quantities(st, s.params, s.grid), q0);
                    const auto* row = probe->second;
                    std::printf("%4g | %9.3e (%9.3e)  %9.3e (%9.3e)  %9.3e (%9.3e)\n", row->t,
                                c.c_m, row->c_m, c.c_e, row->c_e, c.c_h, row->c_h);
                }
                ++step_index;
            });
            return 0;
        }
        default:
            throw std::invalid_argument("table id must be 1..5");
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Gardner equation solver (extended cubic B-spline collocation)"};
    app.require_subcommand(1);

    CommonOptions opt;
    std::string snapshot_list;
    ScanSpec scan_spec;
    scan_spec.objective_time = 0.0;
    double stab_h = 0.0, eps_lo = 0.0, eps_hi = 1.0, lin_weight = 1.0;
    int modes = 720, eps_count = 16;
    int table_id = 0;

    const auto add_common = [&](CLI::App* cmd, bool with_grid) {
        cmd->add_option("--preset", opt.preset_name, "experiment preset: pulse, kink, generation");
        if (with_grid) {
            cmd->add_option("--n", opt.n, "number of grid intervals");
            cmd->add_option("--t-end", opt.t_end, "simulation end time");
            cmd->add_option("--epsilon", opt.epsilon, "constant forcing term");
        }
        cmd->add_option("--dt", opt.dt, "time step");
        cmd->add_option("--lambda", opt.lambda, "basis extension parameter");
        cmd->add_option("--out", opt.out_dir, "output directory (default: out)");
        cmd->add_option("--format", opt.format_name, "output format: csv or json");
    };

    CLI::App* run = app.add_subcommand("run", "integrate an experiment and export results");
    add_common(run, true);
    run->add_option("--snapshots", snapshot_list, "comma-separated profile snapshot times");

    CLI::App* scan_cmd = app.add_subcommand("scan", "optimize the extension parameter");
    add_common(scan_cmd, true);
    scan_cmd->add_option("--lo", scan_spec.lo, "scan window lower bound (default -1)");
    scan_cmd->add_option("--hi", scan_spec.hi, "scan window upper bound (default 1)");
    scan_cmd->add_option("--coarse-step", scan_spec.coarse_step,
                         "first-pass step size (default 0.01)");
    scan_cmd->add_option("--refine-rounds", scan_spec.refine_rounds,
                         "tenfold refinement rounds (default 6)");
    scan_cmd->add_option("--objective-time", scan_spec.objective_time,
                         "time at which the error is scored (default: t_end)");

    CLI::App* stab = app.add_subcommand("stability", "sweep the amplification factors");
    add_common(stab, false);
    double mu3_flag = 1.0;
    stab->add_option("--mu3", mu3_flag, "dispersion constant when no preset is given (default 1)");
    stab->add_option("--dx", stab_h, "mesh size when no preset is given");
    stab->add_option("--eps-lo", eps_lo, "lower end of the frozen-nonlinearity range");
    stab->add_option("--eps-hi", eps_hi, "upper end of the frozen-nonlinearity range");
    stab->add_option("--modes", modes, "number of mode angles (default 720)");
    stab->add_option("--eps-count", eps_count, "number of eps samples (default 16)");
    stab->add_option("--lin-weight", lin_weight, "linearization weight of the frozen term");

    CLI::App* table = app.add_subcommand("table", "reproduce a reference table");
    table->add_option("id", table_id, "table number 1..5")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (run->parsed()) return cmd_run(opt, snapshot_list);
        if (scan_cmd->parsed()) return cmd_scan(opt, scan_spec);
        if (stab->parsed())
            return cmd_stability(opt, mu3_flag, stab_h, eps_lo, eps_hi, modes, eps_count,
                                 lin_weight);
        if (table->parsed()) return cmd_table(table_id);
    } catch (const SolverError& e) {
        std::fprintf(stderr, "numerical failure: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
