#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "tpp/grid.hpp"
#include "tpp/model.hpp"

namespace tpp {

/// Both species at time levels k-1 and k. Levels are numbered from 1: level
/// k sits at t_min + (k-1)*dt, so a run steps k = 1 .. nj-1 and ends with
/// k == nj at t_max.
struct SimState {
    Field s1_prev;
    Field s1_curr;
    Field s2_prev;
    Field s2_curr;
    int k = 1;

    friend bool operator==(const SimState&, const SimState&) = default;
};

inline double time_of(const SimState& s, const GridSpec& g) { return g.t(s.k - 1); }

/// Samples the plateau at every node, zeroes the Dirichlet nodes and copies
/// level k into level k-1 so the backward difference of the initial velocity
/// vanishes. Returns k = 1.
SimState build_initial_state(const GridSpec& g, const InitialCondition& ic);

/// Three-level telegraph update solved from the discrete residual
///
///   tau/dt^2 (S+ - 2S + S-) + (1 - tau F'(S)) (S - S-)/dt - D/dx^2 (E - 2S + W) - F(S) = 0
///
/// for S+ at every interior node. Both species read level-k data only.
/// Boundary nodes are set to zero. Non-finite values propagate unchanged.
SimState step_telegraph(const SimState& state, const ModelParams& p, const GridSpec& g);

/// Two-level forward-Euler reaction-diffusion update (tau ignored).
SimState step_diffusive(const SimState& state, const ModelParams& p, const GridSpec& g);

/// In-place variants used by the time loop. Level k-1 storage is reused for
/// the new level, so no allocation happens per step.
void advance_telegraph(SimState& state, const ModelParams& p, const GridSpec& g);
void advance_diffusive(SimState& state, const ModelParams& p, const GridSpec& g);

/// Composite trapezoid over all nodes.
double total_population(const Field& f, const GridSpec& g);

/// What run() records besides the summary diagnostics.
struct ProbeConfig {
    /// Position of the time-series probe; nullopt disables the series.
    std::optional<double> probe_x = 25.0;
    /// Record every n-th level in the time series (level 1 and the final
    /// level are always recorded).
    int series_stride = 1;
    /// Dump the full field every n-th level; 0 disables.
    int field_stride = 0;
    /// |density| above this (or any non-finite value) halts the run.
    double blow_up_threshold = 1e6;
};

struct SeriesSample {
    double t;
    double s1_probe;
    double s2_probe;
    double p1;
    double p2;
};

struct FieldSnapshot {
    double t;
    Field s1;
    Field s2;
};

struct RunResult {
    GridSpec grid;
    Scheme scheme = Scheme::Telegraph;
    double blow_up_threshold = 1e6;

    /// Fields at the last computed level.
    Field s1_final;
    Field s2_final;
    double t_final = 0.0;
    int k_final = 0;

    std::vector<SeriesSample> series;
    std::vector<FieldSnapshot> field;

    /// Extremes over every level from the initial state onward.
    double min_prey = 0.0;
    double min_predator = 0.0;
    double max_abs_density = 0.0;
    std::optional<double> first_negative_time;

    /// Set when a non-finite value or |density| > blow_up_threshold appears.
    std::optional<double> first_failure_time;
    bool halted_early = false;

    double min_density() const { return min_prey < min_predator ? min_prey : min_predator; }
    bool blew_up() const { return first_failure_time.has_value(); }
    double final_prey_population() const;
    double final_predator_population() const;
};

/// Validates the inputs, then advances from k = 1 to k = nj - 1, halting
/// early (a result flag, not an error) on blow-up.
RunResult run(const ModelParams& p, const GridSpec& g, const InitialCondition& ic, Scheme scheme,
              const ProbeConfig& probes = {});

}  // namespace tpp
