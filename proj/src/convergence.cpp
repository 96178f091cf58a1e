#include "tpp/convergence.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cmath>
#include <limits>
#include <thread>

#include "tpp/error.hpp"
#include "tpp/solver.hpp"

namespace tpp {

namespace {

constexpr std::array<ReferenceRow, 14> kReference{{
    {{5.0, 0.002}, 62.69325, 18.90470, false},
    {{3.5, 0.002}, 65.13776, 19.45726, false},
    {{2.0, 0.002}, 70.27077, 20.51610, false},
    {{1.0, 0.002}, 71.68832, 21.04255, false},
    {{0.75, 0.00175}, 72.22790, 21.17758, false},
    {{0.5, 0.0015}, 72.56129, 21.29889, false},
    {{0.1, 0.001}, 73.13264, 21.49681, false},
    {{0.05, 0.0005}, 73.20856, 21.52185, false},
    {{0.04, 0.0004}, 73.22319, 21.52683, false},
    {{0.03, 0.0003}, 73.23832, 21.53186, false},
    {{0.02, 0.0002}, 73.25332, 21.53683, false},
    {{0.01, 0.0001}, 73.26829, 21.54183, false},
    {{0.005, 0.00005}, 73.27579, 21.54433, true},
    {{0.0025, 0.000025}, 73.27954, 21.54558, true},
}};

ConvergenceRow run_level(const ModelParams& p, const Domain& domain, const InitialCondition& ic,
                         const RefinementLevel& level) {
    ConvergenceRow row;
    row.dx = level.dx;
    row.dt = level.dt;
    row.p1_final = row.p2_final = std::numeric_limits<double>::quiet_NaN();
    const auto start = std::chrono::steady_clock::now();
    try {
        const GridSpec g = fit_grid(domain, level.dx, level.dt);
        row.dx = g.dx;
        row.dt = g.dt;
        ProbeConfig probes;
        probes.probe_x.reset();
        const RunResult r = run(p, g, ic, Scheme::Telegraph, probes);
        if (r.blew_up()) {
            row.failure = "blow-up at t=" + std::to_string(*r.first_failure_time);
        } else {
            row.p1_final = r.final_prey_population();
            row.p2_final = r.final_predator_population();
        }
    } catch (const Error& e) {
        row.failure = e.what();
    }
    row.runtime_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return row;
}

}  // namespace

std::span<const ReferenceRow> reference_ladder() { return kReference; }

std::vector<RefinementLevel> default_levels(bool include_long_running) {
    std::vector<RefinementLevel> out;
    for (const auto& r : kReference)
        if (include_long_running || !r.long_running) out.push_back(r.level);
    return out;
}

std::vector<ConvergenceRow> refinement_study(const ModelParams& p, const Domain& domain,
                                             const InitialCondition& ic, std::span<const RefinementLevel> levels,
                                             unsigned workers) {
    if (levels.empty()) throw RejectedParam("levels", "must not be empty");
    std::vector<ConvergenceRow> rows(levels.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < levels.size(); i = next++) rows[i] = run_level(p, domain, ic, levels[i]);
    };
    const unsigned n = std::clamp<unsigned>(workers, 1u, static_cast<unsigned>(levels.size()));
    if (n == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < n; ++w) pool.emplace_back(worker);
    }
    return rows;
}

}  // namespace tpp
