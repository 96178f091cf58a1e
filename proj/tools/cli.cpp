#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tpp/config.hpp"
#include "tpp/consistency.hpp"
#include "tpp/convergence.hpp"
#include "tpp/csv.hpp"
#include "tpp/error.hpp"
#include "tpp/solver.hpp"
#include "tpp/stability.hpp"
#include "tpp/sweep.hpp"

namespace tpp::cli {

namespace {

void write_table(const std::vector<StudyRow>& rows, CsvSchema schema, const std::string& path, std::ostream& out) {
    if (path.empty() || path == "-") {
        emit_csv(rows, schema, out);
        return;
    }
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) throw IoError("cannot open '" + path + "' for writing");
    emit_csv(rows, schema, file);
    file.close();
    if (!file) throw IoError("failed writing '" + path + "'");
}

struct SimulateArgs {
    std::string config;
    std::string profile_out;
    std::string series_out;
    std::string field_out;
};

int do_simulate(const SimulateArgs& a, std::ostream& out) {
    const RunConfig cfg = load_config(a.config);
    const RunResult r = run(cfg.params, cfg.grid, cfg.ic, cfg.scheme, cfg.probes());
    const StabilityVerdict v = classify_run(r, cfg.neg_tol);
    if (!a.profile_out.empty()) write_table(profile_rows(r), CsvSchema::Profile, a.profile_out, out);
    if (!a.series_out.empty()) write_table(timeseries_rows(r), CsvSchema::Timeseries, a.series_out, out);
    if (!a.field_out.empty()) write_table(field_rows(r), CsvSchema::Field, a.field_out, out);
    out << "scheme=" << to_string(cfg.scheme) << "\n"
        << "ni=" << cfg.grid.ni << "\n"
        << "nj=" << cfg.grid.nj << "\n"
        << "t_final=" << format_real(r.t_final) << "\n"
        << "P1=" << format_real(r.final_prey_population()) << "\n"
        << "P2=" << format_real(r.final_predator_population()) << "\n"
        << "min_density=" << format_real(v.min_density) << "\n"
        << "max_abs_density=" << format_real(v.max_abs_density) << "\n"
        << "verdict=" << to_string(v.kind) << "\n";
    if (v.first_failure_time) out << "first_failure_time=" << format_real(*v.first_failure_time) << "\n";
    return kExitOk;
}

struct SweepArgs {
    std::string config;
    double d_min = 1.0, d_max = 70.0, tau_min = 0.01, tau_max = 0.1;
    int d_steps = 8, tau_steps = 8;
    unsigned workers = 0;
    std::string out;
};

int do_sweep(const SweepArgs& a, std::ostream& out) {
    const RunConfig cfg = load_config(a.config);
    SweepConfig sc;
    sc.d_min = a.d_min;
    sc.d_max = a.d_max;
    sc.d_steps = a.d_steps;
    sc.tau_min = a.tau_min;
    sc.tau_max = a.tau_max;
    sc.tau_steps = a.tau_steps;
    sc.reactive = cfg.params;
    sc.grid = cfg.grid;
    sc.ic = cfg.ic;
    sc.blow_up_threshold = cfg.blow_up_threshold;
    sc.neg_tol = cfg.neg_tol;
    sc.workers = a.workers;
    write_table(sweep_rows(sweep_phase_diagram(sc)), CsvSchema::Sweep, a.out, out);
    return kExitOk;
}

struct BoundsArgs {
    std::string which;
    std::string config;
    std::optional<double> a1, a2, b1, c1, c2, d1, d2, tau1, tau2;
    double dx = 0.0;
    std::optional<double> dt;
    double m1 = 0.0, m2 = 0.0;
    std::optional<double> xi;
    std::string out;
};

int do_bounds(const BoundsArgs& a, std::ostream& out, std::ostream& err) {
    ModelParams p = a.config.empty() ? ModelParams::reference() : load_config(a.config).params;
    auto apply = [](const std::optional<double>& v, double& dst) {
        if (v) dst = *v;
    };
    apply(a.a1, p.a1);
    apply(a.a2, p.a2);
    apply(a.b1, p.b1);
    apply(a.c1, p.c1);
    apply(a.c2, p.c2);
    apply(a.d1, p.d1);
    apply(a.d2, p.d2);
    apply(a.tau1, p.tau1);
    apply(a.tau2, p.tau2);
    if (!(a.dx > 0.0)) throw RejectedParam("dx", "must be > 0");
    if (a.dt && !(*a.dt > 0.0)) throw RejectedParam("dt", "must be > 0");

    std::vector<StudyRow> rows;
    if (a.which == "diffusive") {
        validate_params(p, Scheme::Diffusive);
        const LinearizationPoint lin{a.m1, a.m2};
        for (const Species s : {Species::Prey, Species::Predator}) {
            const DtBound b = vn_dt_bound_diffusive(p, a.dx, lin, s, a.xi);
            const double d = s == Species::Prey ? p.d1 : p.d2;
            std::optional<double> dt = a.dt;
            if (!dt && !b.is_unbounded()) dt = b.value();
            std::optional<double> sigma;
            if (dt) sigma = d * *dt / (a.dx * a.dx);
            rows.push_back(bounds_row("diffusive", s, b, sigma, std::nullopt));
            if (a.dt) err << to_string(s) << ": dt=" << format_real(*a.dt) << (b.admits(*a.dt) ? " within" : " exceeds")
                          << " bound\n";
        }
    } else {
        validate_params(p, Scheme::Telegraph);
        for (const Species s : {Species::Prey, Species::Predator}) {
            const bool prey = s == Species::Prey;
            const double d = prey ? p.d1 : p.d2;
            const double tau = prey ? p.tau1 : p.tau2;
            const DtBound b = telegraph_dt_bound(d, tau, a.dx);
            const double dt = a.dt.value_or(b.value());
            const TelegraphStability st = telegraph_vn_stable(d, tau, a.dx, dt);
            rows.push_back(bounds_row("telegraph", s, b, st.sigma, st.dt_over_tau));
            if (a.dt) err << to_string(s) << ": " << (st.stable ? "stable" : "unstable") << "\n";
        }
    }
    write_table(rows, CsvSchema::Bounds, a.out, out);
    return kExitOk;
}

struct ConvergeArgs {
    std::string config;
    std::string levels;
    std::string out;
    unsigned workers = 1;
};

int do_converge(const ConvergeArgs& a, std::ostream& out, std::ostream& err) {
    const RunConfig cfg = load_config(a.config);
    const std::vector<RefinementLevel> levels = load_levels(a.levels);
    const auto rows = refinement_study(cfg.params, cfg.domain, cfg.ic, levels, a.workers);
    for (const auto& r : rows)
        if (!r.ok()) err << "level dx=" << format_real(r.dx) << " dt=" << format_real(r.dt) << ": " << r.failure << "\n";
    write_table(convergence_rows(rows), CsvSchema::Convergence, a.out, out);
    return kExitOk;
}

struct ConsistencyArgs {
    int levels = 4;
    std::string scheme = "telegraph";
    std::string config;
    std::string out;
};

int do_consistency(const ConsistencyArgs& a, std::ostream& out, std::ostream& err) {
    const Scheme scheme = a.scheme == "diffusive" ? Scheme::Diffusive : Scheme::Telegraph;
    ModelParams p = a.config.empty() ? ModelParams::reference() : load_config(a.config).params;
    if (scheme == Scheme::Diffusive) p.tau1 = p.tau2 = 0.0;
    const GridSpec base = build_grid(0.0, 50.0, 0.0, 1.0, 0.5, 0.01);
    const auto rows = consistency_order_study(p, base, a.levels, scheme);
    write_table(consistency_rows(rows), CsvSchema::Consistency, a.out, out);
    err << "observed temporal order: " << format_real(observed_temporal_order(rows)) << "\n";
    return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Telegraph predator-prey solver and stability toolkit", "tpp-cli"};
    app.require_subcommand(1);

    SimulateArgs sim;
    auto* simulate = app.add_subcommand("simulate", "Run one simulation from a config file");
    simulate->add_option("--config", sim.config, "Config file")->required();
    simulate->add_option("--profile-out", sim.profile_out, "Final profile CSV (x,s1,s2)");
    simulate->add_option("--series-out", sim.series_out, "Probe time series CSV");
    simulate->add_option("--field-out", sim.field_out, "Strided full-field CSV (needs field_stride)");

    SweepArgs sw;
    auto* sweep = app.add_subcommand("sweep", "Classify runs over a (D, tau) lattice");
    sweep->add_option("--config", sw.config, "Config file (reactive params, grid, IC)")->required();
    sweep->add_option("--d-min", sw.d_min)->required();
    sweep->add_option("--d-max", sw.d_max)->required();
    sweep->add_option("--d-steps", sw.d_steps)->required();
    sweep->add_option("--tau-min", sw.tau_min)->required();
    sweep->add_option("--tau-max", sw.tau_max)->required();
    sweep->add_option("--tau-steps", sw.tau_steps)->required();
    sweep->add_option("--workers", sw.workers, "Worker threads (0 = all cores)");
    sweep->add_option("--out", sw.out, "Output CSV")->required();

    BoundsArgs bd;
    auto* bounds = app.add_subcommand("bounds", "Closed-form von Neumann time-step bounds");
    bounds->add_option("--case", bd.which)->required()->check(CLI::IsMember({"diffusive", "telegraph"}));
    bounds->add_option("--config", bd.config, "Take parameters from a config file");
    bounds->add_option("--a1", bd.a1);
    bounds->add_option("--a2", bd.a2);
    bounds->add_option("--b1", bd.b1);
    bounds->add_option("--c1", bd.c1);
    bounds->add_option("--c2", bd.c2);
    bounds->add_option("--d1", bd.d1);
    bounds->add_option("--d2", bd.d2);
    bounds->add_option("--tau1", bd.tau1);
    bounds->add_option("--tau2", bd.tau2);
    bounds->add_option("--dx", bd.dx)->required();
    bounds->add_option("--dt", bd.dt, "Evaluate sigma and dt/tau at this step");
    bounds->add_option("--m1", bd.m1, "Linearization prey density");
    bounds->add_option("--m2", bd.m2, "Linearization predator density");
    bounds->add_option("--xi", bd.xi, "Fourier phase in [0, pi] (default: worst mode)");
    bounds->add_option("--out", bd.out, "Output CSV (default stdout)");

    ConvergeArgs cv;
    auto* converge = app.add_subcommand("converge", "Mesh-refinement study of final populations");
    converge->add_option("--config", cv.config)->required();
    converge->add_option("--levels", cv.levels, "File of dx,dt pairs")->required();
    converge->add_option("--out", cv.out)->required();
    converge->add_option("--workers", cv.workers);

    ConsistencyArgs cs;
    auto* consistency = app.add_subcommand("check-consistency", "Manufactured-solution truncation-order study");
    consistency->add_option("--levels", cs.levels)->required()->check(CLI::Range(3, 30));
    consistency->add_option("--scheme", cs.scheme)->check(CLI::IsMember({"telegraph", "diffusive"}));
    consistency->add_option("--config", cs.config);
    consistency->add_option("--out", cs.out, "Output CSV (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitValidation;
    }

    try {
        if (*simulate) return do_simulate(sim, out);
        if (*sweep) return do_sweep(sw, out);
        if (*bounds) return do_bounds(bd, out, err);
        if (*converge) return do_converge(cv, out, err);
        if (*consistency) return do_consistency(cs, out, err);
    } catch (const IoError& e) {
        err << "I/O error: " << e.what() << "\n";
        return kExitIo;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitValidation;
    }
    return kExitValidation;
}

}  // namespace tpp::cli
