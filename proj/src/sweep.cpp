#include "tpp/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>
#include <vector>

#include "tpp/error.hpp"

namespace tpp {

std::string_view to_string(VerdictKind k) {
    switch (k) {
        case VerdictKind::Stable: return "Stable";
        case VerdictKind::Unstable: return "Unstable";
        case VerdictKind::NegativeDensityFlagged: return "NegativeDensityFlagged";
    }
    return "Unstable";
}

VerdictKind verdict_from_string(std::string_view text) {
    if (text == "Stable") return VerdictKind::Stable;
    if (text == "Unstable") return VerdictKind::Unstable;
    if (text == "NegativeDensityFlagged") return VerdictKind::NegativeDensityFlagged;
    throw ParseError(0, "unknown verdict '" + std::string(text) + "'");
}

StabilityVerdict classify_run(const RunResult& r, double neg_tol) {
    StabilityVerdict v;
    v.min_density = r.min_density();
    v.max_abs_density = r.max_abs_density;
    if (r.first_failure_time || !std::isfinite(r.max_abs_density) || r.max_abs_density > r.blow_up_threshold) {
        v.kind = VerdictKind::Unstable;
        v.first_failure_time = r.first_failure_time.value_or(r.t_final);
    } else if (v.min_density < -neg_tol) {
        v.kind = VerdictKind::NegativeDensityFlagged;
    } else {
        v.kind = VerdictKind::Stable;
    }
    return v;
}

double lattice_value(double lo, double hi, int steps, int i) {
    if (i == steps - 1) return hi;
    return lo + (hi - lo) * i / (steps - 1);
}

namespace {

void validate_sweep(const SweepConfig& c) {
    std::vector<RejectedParam::Violation> bad;
    if (c.d_steps < 2) bad.push_back({"d_steps", "must be >= 2"});
    if (c.tau_steps < 2) bad.push_back({"tau_steps", "must be >= 2"});
    if (!std::isfinite(c.d_min) || !std::isfinite(c.d_max) || !(c.d_max > c.d_min))
        bad.push_back({"d_max", "must be finite and > d_min"});
    if (!std::isfinite(c.tau_min) || !std::isfinite(c.tau_max) || !(c.tau_max > c.tau_min))
        bad.push_back({"tau_max", "must be finite and > tau_min"});
    if (c.neg_tol && !(*c.neg_tol >= 0.0)) bad.push_back({"neg_tol", "must be >= 0"});
    if (!bad.empty()) throw RejectedParam(std::move(bad));
}

SweepRow run_point(const SweepConfig& c, double d, double tau, double neg_tol) {
    SweepRow row;
    row.d = d;
    row.tau = tau;
    ModelParams p = c.reactive;
    p.d1 = p.d2 = d;
    p.tau1 = p.tau2 = tau;
    ProbeConfig probes;
    probes.probe_x.reset();
    probes.blow_up_threshold = c.blow_up_threshold;
    try {
        row.verdict = classify_run(run(p, c.grid, c.ic, Scheme::Telegraph, probes), neg_tol);
    } catch (const Error& e) {
        row.verdict.kind = VerdictKind::Unstable;
        row.verdict.first_failure_time = c.grid.t_min;
        row.verdict.min_density = 0.0;
        row.verdict.max_abs_density = 0.0;
        row.note = e.what();
    }
    return row;
}

}  // namespace

std::vector<SweepRow> sweep_phase_diagram(const SweepConfig& cfg) {
    validate_sweep(cfg);
    const double neg_tol = cfg.neg_tol.value_or(default_neg_tol(cfg.ic));
    const std::size_t total = static_cast<std::size_t>(cfg.d_steps) * static_cast<std::size_t>(cfg.tau_steps);
    std::vector<SweepRow> rows(total);

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t idx = next++; idx < total; idx = next++) {
            const int j = static_cast<int>(idx / static_cast<std::size_t>(cfg.d_steps));
            const int i = static_cast<int>(idx % static_cast<std::size_t>(cfg.d_steps));
            rows[idx] = run_point(cfg, lattice_value(cfg.d_min, cfg.d_max, cfg.d_steps, i),
                                  lattice_value(cfg.tau_min, cfg.tau_max, cfg.tau_steps, j), neg_tol);
        }
    };

    unsigned n = cfg.workers ? cfg.workers : std::max(1u, std::thread::hardware_concurrency());
    n = static_cast<unsigned>(std::min<std::size_t>(n, total));
    if (n <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(n);
        for (unsigned w = 0; w < n; ++w) pool.emplace_back(worker);
    }
    return rows;
}

}  // namespace tpp
